// statgeo - twist reduction and the harmonic map into the hyperbolic plane
//
// n = 3 only. The twist one-form is omega = u^3 * dtheta (Hodge dual on the
// horizontal metric, orientation eps_123 = +sqrt(det g)). For Einstein
// entries omega is closed and integrates to a potential psi; the map
// Phi = (psi, u^2) lands in the upper half plane with metric y^-2(dx^2+dy^2).

#ifndef STATGEO_REDUCTION4D_HPP_
#define STATGEO_REDUCTION4D_HPP_

#include <utility>
#include <vector>

#include "statgeo/oracle.hpp"
#include "statgeo/spacetime.hpp"

namespace statgeo {

// (*beta)_i = (1/2) sqrt(det g) eps_ilm g^{lj} g^{mk} beta_jk for an
// antisymmetric beta on a 3-d chart.
Vec hodge_star2(const Mat& g, const Mat& beta);

Vec twist_one_form(const StationarySpacetime& S, const Vec& p);
Vec twist_one_form(const PointData& pd);

// Analytic coordinate partials d_i omega_j (second derivatives of theta and
// first of u, g enter; all exact).
Mat twist_one_form_partials(const PointData& pd);

// Per-point bundle of the twist machinery. psi is path-dependent data the
// caller obtains from twist_potential (defined up to the anchor convention).
struct TwistData {
  Mat lambda2;
  Vec omega;
  double psi = 0.0;
  std::pair<double, double> phi;  // (psi, u^2), second component > 0
  Mat pullback;                   // frame components, (n+1) x (n+1)
  double energy = 0.0;
  std::pair<double, double> tension;
  double bochner_residual = 0.0;
};

TwistData twist_data(const StationarySpacetime& S, const Vec& p, double psi_value);

struct TwistResiduals {
  double norm = 0.0;        // | |omega|^2 - (u^6/2)|Lambda|^2 |
  double divergence = 0.0;  // | g^kl nabla_k omega_l - 3 <omega, d log u> |
  double curl = 0.0;        // max_j | (*d omega)_j - sign * 2 u Ric(e_0,e_j) |
};

TwistResiduals twist_identities(const StationarySpacetime& S, const Vec& p);

// |*d omega|_inf, zero for closed omega; guards psi-dependent operations.
double closedness_defect(const StationarySpacetime& S, const Vec& p);

// Line integral of omega along a polyline (adaptive Gauss quadrature per
// segment). Raises NotClosedError when the curl residual along the path
// exceeds 1e-4. psi(base) = 0 by convention; the polyline must start at
// `base` and end at `target`.
double twist_potential(const StationarySpacetime& S, const Vec& base, const Vec& target,
                       const std::vector<Vec>& polyline, double quad_tol = 1e-8);

// Phi^* g_-1 = u^-4 omega (x) omega + 4 dlog u (x) dlog u in the adapted
// frame (indices 0..n, all e_0 components vanish).
Mat pullback_hyperbolic(const StationarySpacetime& S, const Vec& p);

struct EnergyDensity {
  double trace_form = 0.0;   // ghat-trace of the pullback tensor
  double closed_form = 0.0;  // u^-4 |omega|^2 + 4 |d log u|^2
};

EnergyDensity energy_density(const StationarySpacetime& S, const Vec& p);

// Components of the harmonic-map Laplacian of Phi in the target basis:
//   x: tri_hat psi - 4 <d psi, d log u>,
//   y: 2 u^2 tri_hat log u + u^-2 |omega|^2  ( = 2 Ric(e_0,e_0) ).
std::pair<double, double> tension_field(const StationarySpacetime& S, const Vec& p);

struct BochnerTerms {
  double lhs = 0.0;  // tri_hat( e(Phi)/2 ), FD Hessian of the analytic value
  double rhs = 0.0;  // sum of squares + I2 + I3
  double i2 = 0.0, i3 = 0.0;
  double residual = 0.0;  // |lhs - rhs| / (1 + |rhs|)
};

BochnerTerms bochner_terms(const StationarySpacetime& S, const Vec& p);
double bochner_residual(const StationarySpacetime& S, const Vec& p);

struct HMonitor {
  double h = 0.0;           // 2|d log u|^2 + (1/2) u^-4 |omega|^2
  double grad_part = 0.0;   // 2|d log u|^2
  double twist_part = 0.0;  // (1/2) u^-4 |omega|^2
};

HMonitor h_monitor(const StationarySpacetime& S, const Vec& p);

// The target H = {y > 0} with metric y^-2 (dx^2 + dy^2); Christoffels
// Gamma^2_11 = 1/y, Gamma^1_12 = Gamma^2_22 = -1/y, rest zero.
CoordinateMetric hyperbolic_plane_metric();
Ten3 hyperbolic_christoffels(double y);

}  // namespace statgeo

#endif
