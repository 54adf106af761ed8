// statgeo - stationary spacetimes in canonical form gbar = w (dt+theta)^2 + g
//
// w = -u^2 on the lorentzian branch and w = +u^2 on the riemannian branch
// (the associated metric ghat). All component fields are time-independent.

#ifndef STATGEO_SPACETIME_HPP_
#define STATGEO_SPACETIME_HPP_

#include <optional>
#include <vector>

#include "statgeo/fields.hpp"

namespace statgeo {

enum class Branch { lorentzian, riemannian };

// Degenerate-input thresholds; horizons are genuine chart boundaries, so we
// raise instead of clamping.
inline constexpr double kMinLapse = 1e-8;
inline constexpr double kMinDetG = 1e-12;

struct StationarySpacetime {
  int n = 0;  // spatial dimension
  Branch branch = Branch::lorentzian;
  ScalarField u;                   // lapse, u > 0
  std::vector<ScalarField> theta;  // shift covector theta_i, n entries
  std::vector<ScalarField> g;      // horizontal metric g_ij, row-major n*n
  std::optional<double> lambda;    // Einstein constant when known
  Domain domain = everywhere();

  double w_sign() const { return branch == Branch::lorentzian ? -1.0 : 1.0; }
};

// Values and analytic partials of (u, theta, g) at one point, plus the pieces
// every curvature formula needs. Pure data; safe to share across threads.
struct PointData {
  int n = 0;
  double w_sign = -1.0;
  Vec p;

  double u = 0.0;
  Vec du;
  Mat ddu;

  Vec theta;
  Mat dtheta;                 // dtheta(i,j)    = d_i theta_j
  std::vector<Mat> ddtheta;   // ddtheta[j](i,k) = d_i d_k theta_j

  Mat g;
  Mat ginv;
  double detg = 0.0;
  Ten3 dg;    // dg(k,i,j)      = d_k g_ij
  Ten4 ddg;   // ddg(k,l,i,j)   = d_k d_l g_ij
  Ten3 gamma; // Gamma^k_{ij} of g

  Mat lambda2;  // Lambda_ij = d_i theta_j - d_j theta_i

  double w() const { return w_sign * u * u; }
  Vec dw() const { return (2.0 * w_sign * u) * du; }
  // coordinate second partials of w
  Mat ddw() const {
    Mat m = (2.0 * w_sign * u) * ddu;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) += 2.0 * w_sign * du[i] * du[j];
    return m;
  }

  // covariant Hessian of a function given coordinate partials
  Mat covariant_hessian(const Vec& d1, const Mat& d2) const {
    Mat h(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = d2(i, j);
        for (int k = 0; k < n; ++k) s -= gamma(k, i, j) * d1[k];
        h(i, j) = s;
      }
    return h;
  }

  // nabla_k Lambda_ij (Levi-Civita of g)
  Ten3 grad_lambda2() const;

  double norm2_lambda2() const {  // |Lambda|^2 = Lambda_ij Lambda_kl g^ik g^jl
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) s += lambda2(i, j) * lambda2(k, l) * ginv(i, k) * ginv(j, l);
    return s;
  }
};

// Evaluates all jets at p. Throws DomainError when p is outside the chart and
// SingularMetricError when u or det g fall below the degenerate thresholds.
PointData eval_point(const StationarySpacetime& S, const Vec& p);

// Coordinate components of gbar in {t, x^1..x^n}:
//   gbar_00 = w, gbar_0i = w theta_i, gbar_ij = g_ij + w theta_i theta_j.
Mat metric_components(const StationarySpacetime& S, const Vec& p);

// Closed-form inverse: gbar^00 = w^-1 + |theta|^2, gbar^0i = -theta^i,
//   gbar^ij = g^ij.
Mat inverse_metric_components(const StationarySpacetime& S, const Vec& p);

// The associated metric: same (u, theta, g), opposite sign of w.
StationarySpacetime hat_metric(const StationarySpacetime& S);

// Horizontal Riemann tensor R_ijkl of g (sign fixed so R_1212 > 0 on round
// spheres) and its Ricci contraction R_ij = g^kl R_kilj.
Ten4 horizontal_riemann(const PointData& pd);
Mat horizontal_ricci(const PointData& pd);

}  // namespace statgeo

#endif
