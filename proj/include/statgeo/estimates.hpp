// statgeo - numerical monitors for the gradient and curvature estimates
//
// Balls are sampled by shooting radial ghat-geodesics, so the recorded
// distances are upper bounds on the true ghat-distance and every sup is taken
// over a subset of the ball; reports state this. No universal constant is
// asserted, only finiteness and scale invariance of the implied ratio.

#ifndef STATGEO_ESTIMATES_HPP_
#define STATGEO_ESTIMATES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "statgeo/geodesics.hpp"
#include "statgeo/spacetime.hpp"

namespace statgeo {

struct BallPoint {
  Vec x;           // spatial chart point
  double dist = 0.0;  // ghat arclength from the center along its ray
};

struct BallSample {
  Vec center;
  double radius = 0.0;
  std::vector<BallPoint> points;
};

struct BallOptions {
  int ray_count = 64;
  int per_ray = 16;
  std::uint64_t seed = 12345;
  double tol = 1e-9;
  ExecMode mode = ExecMode::parallel;
};

// Radial ghat-geodesics from `center` (directions uniform on the ghat-unit
// sphere, deterministic in the seed); DomainError if any ray exits before
// arclength a. a = 0 yields the single center point.
BallSample sample_ball(const StationarySpacetime& S, const Vec& center, double a,
                       const BallOptions& opts = {});

struct EstimateReport {
  std::string entry;
  std::string monitor;
  Vec center;
  double a = 0.0;
  double sup_value = 0.0;       // over samples with dist <= a/2
  double bound_form = 0.0;      // sqrt(n)/a + sqrt(max(-lambda,0)), or 1/a^2 + ...
  double implied_constant = 0.0;
  int sample_count = 0;
  double lambda = 0.0;
  std::string note;  // sampling caveat
  std::vector<std::pair<double, double>> samples;  // (distance, monitor value)
};

// sup |dhat log u^2|_ghat = 2 |d log u|_g over the half-radius samples;
// bound sqrt(n)/a + sqrt(max(-lambda,0)). Requires a static entry.
EstimateReport gradient_estimate_ratio(const StationarySpacetime& S, const std::string& entry,
                                       const Vec& center, double a, const BallOptions& opts = {});

// Two monitors on dim M = 4: sup |Rm(gbar)|_ghat with bound 1/a^2 +
// max(-lambda,0), and sup h = 2|dlog u|^2 + u^-4 |omega|^2 / 2 with bound
// 1/a^2.
struct CurvatureReports {
  EstimateReport riemann;
  EstimateReport h;
};

CurvatureReports curvature_estimate_ratio(const StationarySpacetime& S, const std::string& entry,
                                          const Vec& center, double a,
                                          const BallOptions& opts = {});

// |Rm(gbar)|_ghat at a point: frame curvature blocks fully contracted with
// the ghat frame inverse diag(u^-2, g^ij).
double riemann_norm_hat(const StationarySpacetime& S, const Vec& p);

// Static Bochner residual: tri_hat |dlog u|^2 against
// 2|hess log u|^2 + 2|dlog u|^4 + 2 lambda |dlog u|^2, relative.
double static_bochner_residual(const StationarySpacetime& S, const Vec& p);

}  // namespace statgeo

#endif
