// checks: suites pass on the catalog, fd tier loosens honestly, JSON shape

#include <doctest.h>

#include <json.hpp>

#include "statgeo/checks.hpp"

using namespace statgeo;

TEST_SUITE_BEGIN("checks");

TEST_CASE("analytic-tier suites pass for every catalog entry") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = entry_by_name(name, {});
    CheckOptions opts;
    opts.samples = 15;
    const SuiteReport rep = run_check_suite(e, opts);
    for (const auto& c : rep.checks) {
      INFO(name << " / " << c.name << ": " << c.max_residual << " vs " << c.tolerance);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("fd tier passes at its looser tolerances") {
  CheckOptions opts;
  opts.samples = 8;
  opts.tier = TolTier::fd;
  for (const auto& name : {"schwarzschild", "minkowski-rotating", "kerr", "ads"}) {
    const SuiteReport rep = run_check_suite(entry_by_name(name, {}), opts);
    for (const auto& c : rep.checks) {
      INFO(name << " / " << c.name << ": " << c.max_residual << " vs " << c.tolerance);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("fd variant really replaces the analytic partials") {
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  const CatalogEntry fd = fd_variant(kerr);
  const Vec p{5.0, 1.0, 0.0};
  const Vec ga = kerr.S.u.grad(p);
  const Vec gf = fd.S.u.grad(p);
  // close but not identical
  CHECK(max_abs(ga - gf) < 1e-8);
  bool identical = true;
  for (int i = 0; i < 3; ++i) identical = identical && ga[i] == gf[i];
  CHECK_FALSE(identical);
}

TEST_CASE("JSON report is well-formed and deterministic") {
  const CatalogEntry e = entry_by_name("minkowski-rotating", {});
  CheckOptions opts;
  opts.samples = 5;
  const std::string a = suite_report_json(run_check_suite(e, opts), e);
  const std::string b = suite_report_json(run_check_suite(e, opts), e);
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["entry"] == "minkowski-rotating");
  CHECK(j["pass"].is_boolean());
  CHECK(j["checks"].is_array());
  CHECK(j["params"]["omega"] == 0.5);
}

TEST_SUITE_END();
