// statgeo - residual suites over catalog entries
//
// Each check reports the maximum residual over deterministic sample points
// plus anchors, and the tolerance it is held to. Two tiers: "analytic" uses
// the entries' exact partials; "fd" replaces every gradient/Hessian by
// Richardson finite differences of the values and loosens the curvature
// tolerances accordingly.

#ifndef STATGEO_CHECKS_HPP_
#define STATGEO_CHECKS_HPP_

#include <string>
#include <vector>

#include "statgeo/catalog.hpp"
#include "statgeo/sweep.hpp"

namespace statgeo {

enum class TolTier { analytic, fd };

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string entry;
  std::string tier;
  int sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass = true;
};

struct CheckOptions {
  int samples = 50;
  std::uint64_t seed = 1;
  TolTier tier = TolTier::analytic;
  ExecMode mode = ExecMode::parallel;
  double tol_scale = 1.0;  // multiplies every tolerance (tighten to stress)
};

// Entry with every field's gradient/Hessian replaced by finite differences of
// its value (the pure-FD tier).
CatalogEntry fd_variant(const CatalogEntry& e);

SuiteReport run_check_suite(const CatalogEntry& e, const CheckOptions& opts = {});

// max |A - B| / (1 + max|B|) over all components.
double rel_diff(const Ten4& a, const Ten4& b);
double rel_diff(const Mat& a, const Mat& b);

std::string suite_report_json(const SuiteReport& rep, const CatalogEntry& e);

}  // namespace statgeo

#endif
