// statgeo - adapted-frame connection, curvature and Ricci of gbar = w(dt+theta)^2 + g
//
// Frame: e_0 = d/dt, e_i = d/dx^i - theta_i d/dt, so <e_0,e_i> = 0,
// <e_0,e_0> = w, <e_i,e_j> = g_ij. All decomposed quantities are stored in
// this frame. Sign convention: R_ijij > 0 on round spheres.

#ifndef STATGEO_FRAME_GEOMETRY_HPP_
#define STATGEO_FRAME_GEOMETRY_HPP_

#include <utility>

#include "statgeo/spacetime.hpp"

namespace statgeo {

// D_{e_i}e_j   = gamma^k_ij e_k - (1/2) Lambda_ij e_0
// D_{e_0}e_i   = (1/2) w Lambda_ik g^kl e_l + (1/2) (d_i w / w) e_0
// D_{e_0}e_0   = -(1/2) g^ij d_i w e_j
struct FrameConnection {
  Ten3 spatial;       // e_k coefficient of D_{e_i}e_j, indexed (k, i, j)
  Mat time_part;      // e_0 coefficient of D_{e_i}e_j
  Mat mixed_spatial;  // e_l coefficient of D_{e_0}e_i, indexed (l, i)
  Vec mixed_time;     // e_0 coefficient of D_{e_0}e_i
  Vec accel;          // e_j coefficient of D_{e_0}e_0
};

struct CurvatureBlocks {
  int n = 0;
  Ten4 rm_ijkl;  // Rbar(e_i, e_j, e_k, e_l)
  Ten3 rm_ijk0;  // Rbar(e_i, e_j, e_k, e_0), indexed (i, j, k)
  Mat rm_i0j0;   // Rbar(e_i, e_0, e_j, e_0)

  // Full frame tensor Rbar(e_a, e_b, e_c, e_d) with indices 0..n (0 = e_0),
  // assembled from the blocks by the Riemann symmetries.
  Ten4 assemble_full() const;
};

struct RicciBlocks {
  double ric00 = 0.0;  // Ric(e_0, e_0)
  Vec ric0j;           // Ric(e_0, e_j)
  Mat ricij;           // Ric(e_i, e_j)
};

struct FrameGeometry {
  Mat lambda2;  // Lambda_ij
  FrameConnection conn;
  CurvatureBlocks rm;
  RicciBlocks ric;
};

FrameConnection frame_connection(const StationarySpacetime& S, const Vec& p);
FrameConnection frame_connection(const PointData& pd);

CurvatureBlocks curvature_blocks(const StationarySpacetime& S, const Vec& p);
CurvatureBlocks curvature_blocks(const PointData& pd);

// Ric(e_0,e_0) = -tri(w)/2 + |dw|^2/(4w) + (w^2/4)|Lambda|^2
// Ric(e_0,e_j) = (w/2) g^kl nabla_k Lambda_jl + (3/4) g^kl Lambda_jk d_l w
// Ric(e_i,e_j) = R_ij - nabla_ij w/(2w) + d_i w d_j w/(4w^2)
//               - (w/2) g^kl Lambda_ik Lambda_jl
RicciBlocks ricci_blocks(const StationarySpacetime& S, const Vec& p);
RicciBlocks ricci_blocks(const PointData& pd);

// Independent route: trace the curvature blocks against the frame inverse
// metric diag(1/w, g^ij).
RicciBlocks ricci_from_blocks(const CurvatureBlocks& rm, const PointData& pd);

// Ricci of the associated metric ghat expressed through the lorentzian-branch
// blocks: Rhat(e_0,e_0) = (u^4/2)|Lambda|^2 - Ric(e_0,e_0),
// Rhat(e_0,e_j) = -Ric(e_0,e_j),
// Rhat(e_i,e_j) = -u^2 g^kl Lambda_ik Lambda_jl + Ric(e_i,e_j).
RicciBlocks hat_ricci_blocks(const StationarySpacetime& S, const Vec& p);

FrameGeometry frame_geometry(const StationarySpacetime& S, const Vec& p);

// Frame Hessian and Laplacian of a time-independent function f:
//   H(e_0,e_0) = (1/2) <dw, df>,  H(e_0,e_j) = -(1/2) w g^kl Lambda_jk f_l,
//   H(e_i,e_j) = nabla_ij f,      tri_bar f = tri f + (1/2) <d log|w|, df>.
struct HessLap {
  double h00 = 0.0;
  Vec h0j;
  Mat hij;
  double laplacian = 0.0;
};

HessLap hessian_laplacian(const StationarySpacetime& S, const ScalarField& f, const Vec& p);
HessLap hessian_laplacian(const PointData& pd, const Vec& df, const Mat& ddf);

// Conformal horizontal metric gtil = u^{2/(n-2)} g (requires n >= 3).
struct ConformalData {
  Mat gtil;
  Ten3 gamma_til;  // Christoffels of gtil
  Mat ric_til;     // Ricci of gtil via
                   //   Rtil_ij = R_ij - nabla_ij log u
                   //           + (log u)_i (log u)_j/(n-2) - (tri u/u) g_ij/(n-2)
  double conformal_factor = 0.0;  // u^{2/(n-2)}
};

ConformalData conformal_reduction(const StationarySpacetime& S, const Vec& p);

// Laplacian of a field w.r.t. gtil (used by the relation
// u^{2/(n-2)} tri_til L = tri L + <d log u, dL> = tri_hat L).
double conformal_laplacian(const ConformalData& cd, const PointData& pd, const Vec& dL,
                           const Mat& ddL);

// Residuals of the static system R_ij = u^{-1} nabla_ij u + lambda g_ij,
// tri u = -lambda u. Requires max|Lambda| < 1e-10 and lambda set.
std::pair<double, double> static_system_residual(const StationarySpacetime& S, const Vec& p);

// tri f = g^ij nabla_ij f from coordinate partials.
double horizontal_laplacian(const PointData& pd, const Vec& df, const Mat& ddf);

}  // namespace statgeo

#endif
