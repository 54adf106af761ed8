// statgeo - geodesic integration, horizontal projection, completeness probes
//
// Trajectories are integrated in coordinates (x^0..x^n, dx/ds) with
// Dormand-Prince 5(4) and PI step control; Christoffels come from the
// coordinate oracle so these runs are independent of the frame decomposition.
// Tangents are stored in the adapted frame: T^0 = dx^0/ds + T^i theta_i,
// T^i = dx^i/ds, and T^0 w = <T, X> is conserved along geodesics.

#ifndef STATGEO_GEODESICS_HPP_
#define STATGEO_GEODESICS_HPP_

#include <string>
#include <vector>

#include "statgeo/oracle.hpp"
#include "statgeo/spacetime.hpp"
#include "statgeo/sweep.hpp"

namespace statgeo {

enum class MetricKind { lorentzian, hat };
enum class ExitReason { reached_smax, left_domain, step_underflow };

struct GeodesicState {
  double t = 0.0;  // x^0
  Vec x;           // spatial chart point
  double T0 = 0.0; // frame components of the tangent
  Vec Ti;
};

struct TrajectorySample {
  double s = 0.0;
  GeodesicState state;
  double c_drift = 0.0;     // |T^0 w - c| / max(|c|, 1)
  double norm_drift = 0.0;  // |g(T,T) - g(T,T)|_0| / max(|.|_0, 1)
};

struct GeodesicTrajectory {
  std::vector<TrajectorySample> samples;
  std::vector<double> proj_y;  // co-integrated dy/ds = -sum_i T^i theta_i
  double c = 0.0;  // T^0 w at s = 0
  double norm0 = 0.0;
  MetricKind kind = MetricKind::lorentzian;
  ExitReason exit = ExitReason::reached_smax;
  double s_exit = 0.0;

  double max_c_drift() const;
  double max_norm_drift() const;
};

GeodesicTrajectory integrate_geodesic(const StationarySpacetime& S, MetricKind kind,
                                      const GeodesicState& init, double s_max, double tol = 1e-11);

// Projection sigma(s) = (y(s), x(s)) with dy/ds + sum_i T^i theta_i = 0; the
// flow parameter is tau(s) = y(s) - x^0(s).
struct ProjectedSample {
  double s = 0.0;
  double y = 0.0;    // projected x^0 coordinate
  double tau = 0.0;
  Vec x;
  Vec xdot;          // = T^i, unchanged by the projection
  double killing_component = 0.0;  // <sigma_dot, X>, ~0
  double speed_hat = 0.0;          // |sigma_dot|_ghat
  double speed_hat_input = 0.0;    // |gamma_dot|_ghat of the input curve
};

struct ProjectedCurve {
  std::vector<ProjectedSample> samples;
};

ProjectedCurve horizontal_projection(const StationarySpacetime& S,
                                     const GeodesicTrajectory& traj);

// Integrates the reduced ODE on (N, g):
//   nabla_{xdot} xdot = -(c^2/2) grad(w^-1) - c (i_xdot dtheta)^sharp
struct CurveSample {
  double s = 0.0;
  Vec x;
  Vec xdot;
};

struct CurveOnN {
  std::vector<CurveSample> samples;
  ExitReason exit = ExitReason::reached_smax;
  double s_exit = 0.0;
};

CurveOnN projected_geodesic_integrate(const StationarySpacetime& S, const Vec& x0,
                                      const Vec& xdot0, double c, double s_max,
                                      double tol = 1e-11);

struct RayOutcome {
  ExitReason exit = ExitReason::reached_smax;
  double s_exit = 0.0;
  double max_c_drift = 0.0;
};

struct ProbeReport {
  std::vector<RayOutcome> rays;
  int reached = 0;
  int left_domain = 0;
  int underflow = 0;
};

ProbeReport completeness_probe(const StationarySpacetime& S, MetricKind kind,
                               const std::vector<GeodesicState>& fan, double s_max,
                               double tol = 1e-9, ExecMode mode = ExecMode::parallel);

// CSV columns: s, t, x1..xn, T0..Tn, c_drift, gTT_drift.
void write_trajectory_csv(const GeodesicTrajectory& traj, const std::string& path);

}  // namespace statgeo

#endif
