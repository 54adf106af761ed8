// statgeo - brute-force curvature oracle
//
// Differentiates assembled coordinate components of a metric by Richardson
// central differences; never touches the frame-decomposition code paths. The
// sign convention matches the decomposition (R_ijij > 0 on spheres), so
// comparisons are direct.

#ifndef STATGEO_ORACLE_HPP_
#define STATGEO_ORACLE_HPP_

#include <functional>

#include "statgeo/spacetime.hpp"

namespace statgeo {

struct CoordinateMetric {
  int dim = 0;
  std::function<Mat(const Vec&)> components;
  int negative_eigenvalues = 0;  // expected signature
  Domain domain = everywhere();
  double fd_step = 1e-3;  // scaled per-coordinate: h = max(step, step*|x|)
  int richardson_levels = 2;
};

// Full (n+1)-dim coordinate components of gbar (or ghat, per branch).
CoordinateMetric spacetime_coordinate_metric(const StationarySpacetime& S);
// n-dim horizontal metric g.
CoordinateMetric horizontal_coordinate_metric(const StationarySpacetime& S);
// n-dim conformal metric gtil = u^{2/(n-2)} g.
CoordinateMetric conformal_coordinate_metric(const StationarySpacetime& S);

// d_k g_ab and d_k d_l g_ab by finite differences.
Ten3 metric_partials(const CoordinateMetric& m, const Vec& p);
Ten4 metric_second_partials(const CoordinateMetric& m, const Vec& p);

Ten3 coordinate_christoffels(const CoordinateMetric& m, const Vec& p);

// R_abcd = (g_ad,bc + g_bc,ad - g_ac,bd - g_bd,ac)/2
//        + g_ef (Gamma^e_bc Gamma^f_ad - Gamma^e_bd Gamma^f_ac)
Ten4 coordinate_riemann(const CoordinateMetric& m, const Vec& p);
Mat coordinate_ricci(const CoordinateMetric& m, const Vec& p);

// Kretschmann-type full contraction |Rm|^2 with the metric's own inverse.
double riemann_norm2(const Ten4& rm, const Mat& ginv);

// Basis change into the adapted frame e_0 = d/dt, e_i = d/dx^i - theta_i d/dt.
// Columns of `basis` are the coordinate components of the frame vectors.
struct FrameMap {
  int dim = 0;
  Mat basis;      // E(a, alpha): coordinate index a, frame index alpha
  Mat basis_inv;  // inverse, for the reverse transform
};

FrameMap adapted_frame(const StationarySpacetime& S, const Vec& p);

// Covariant tensors of valence 1..4 (pass `inverse = true` to undo).
Vec frame_transform1(const Vec& t, const FrameMap& f, bool inverse = false);
Mat frame_transform2(const Mat& t, const FrameMap& f, bool inverse = false);
Ten3 frame_transform3(const Ten3& t, const FrameMap& f, bool inverse = false);
Ten4 frame_transform4(const Ten4& t, const FrameMap& f, bool inverse = false);

}  // namespace statgeo

#endif
