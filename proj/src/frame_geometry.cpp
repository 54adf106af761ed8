#include "statgeo/frame_geometry.hpp"

#include <cmath>

namespace statgeo {

FrameConnection frame_connection(const PointData& pd) {
  const int n = pd.n;
  const double w = pd.w();
  const Vec dw = pd.dw();

  FrameConnection c;
  c.spatial = pd.gamma;
  c.time_part = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.time_part(i, j) = -0.5 * pd.lambda2(i, j);

  c.mixed_spatial = Mat(n);
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += pd.lambda2(i, k) * pd.ginv(k, l);
      c.mixed_spatial(l, i) = 0.5 * w * s;
    }
  c.mixed_time = Vec(n);
  for (int i = 0; i < n; ++i) c.mixed_time[i] = 0.5 * dw[i] / w;

  c.accel = Vec(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += pd.ginv(i, j) * dw[i];
    c.accel[j] = -0.5 * s;
  }
  return c;
}

FrameConnection frame_connection(const StationarySpacetime& S, const Vec& p) {
  return frame_connection(eval_point(S, p));
}

CurvatureBlocks curvature_blocks(const PointData& pd) {
  const int n = pd.n;
  const double w = pd.w();
  const Vec dw = pd.dw();
  const Mat hess_w = pd.covariant_hessian(dw, pd.ddw());
  const Ten3 dlam = pd.grad_lambda2();
  const Ten4 rm_g = horizontal_riemann(pd);
  const Mat& L = pd.lambda2;

  CurvatureBlocks b;
  b.n = n;
  b.rm_ijkl = Ten4(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          b.rm_ijkl(i, j, k, l) = rm_g(i, j, k, l) +
                                  0.25 * w * (L(i, l) * L(j, k) - L(i, k) * L(j, l)) -
                                  0.5 * w * L(i, j) * L(k, l);

  b.rm_ijk0 = Ten3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        b.rm_ijk0(i, j, k) = -0.5 * (w * dlam(k, i, j) + dw[k] * L(i, j)) +
                             0.25 * (dw[i] * L(j, k) - dw[j] * L(i, k));

  b.rm_i0j0 = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double lam_sq = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lam_sq += L(i, k) * L(j, l) * pd.ginv(k, l);
      b.rm_i0j0(i, j) = -0.5 * hess_w(i, j) + 0.25 * dw[i] * dw[j] / w + 0.25 * w * w * lam_sq;
    }
  return b;
}

CurvatureBlocks curvature_blocks(const StationarySpacetime& S, const Vec& p) {
  return curvature_blocks(eval_point(S, p));
}

Ten4 CurvatureBlocks::assemble_full() const {
  const int d = n + 1;
  Ten4 full(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) full(i + 1, j + 1, k + 1, l + 1) = rm_ijkl(i, j, k, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double v = rm_ijk0(i, j, k);
        full(i + 1, j + 1, k + 1, 0) = v;
        full(i + 1, j + 1, 0, k + 1) = -v;
        full(k + 1, 0, i + 1, j + 1) = v;
        full(0, k + 1, i + 1, j + 1) = -v;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = rm_i0j0(i, j);
      full(i + 1, 0, j + 1, 0) = v;
      full(0, i + 1, j + 1, 0) = -v;
      full(i + 1, 0, 0, j + 1) = -v;
      full(0, i + 1, 0, j + 1) = v;
    }
  return full;
}

RicciBlocks ricci_blocks(const PointData& pd) {
  const int n = pd.n;
  const double w = pd.w();
  const Vec dw = pd.dw();
  const Mat hess_w = pd.covariant_hessian(dw, pd.ddw());
  const Ten3 dlam = pd.grad_lambda2();
  const Mat ric_g = horizontal_ricci(pd);
  const Mat& L = pd.lambda2;

  double lap_w = 0.0, dw2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      lap_w += pd.ginv(i, j) * hess_w(i, j);
      dw2 += pd.ginv(i, j) * dw[i] * dw[j];
    }

  RicciBlocks r;
  r.ric00 = -0.5 * lap_w + 0.25 * dw2 / w + 0.25 * w * w * pd.norm2_lambda2();

  r.ric0j = Vec(n);
  for (int j = 0; j < n; ++j) {
    double div = 0.0, lam_dw = 0.0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        div += pd.ginv(k, l) * dlam(k, j, l);
        lam_dw += pd.ginv(k, l) * L(j, k) * dw[l];
      }
    r.ric0j[j] = 0.5 * w * div + 0.75 * lam_dw;
  }

  r.ricij = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double lam_sq = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lam_sq += pd.ginv(k, l) * L(i, k) * L(j, l);
      r.ricij(i, j) = ric_g(i, j) - 0.5 * hess_w(i, j) / w +
                      0.25 * dw[i] * dw[j] / (w * w) - 0.5 * w * lam_sq;
    }
  return r;
}

RicciBlocks ricci_blocks(const StationarySpacetime& S, const Vec& p) {
  return ricci_blocks(eval_point(S, p));
}

RicciBlocks ricci_from_blocks(const CurvatureBlocks& rm, const PointData& pd) {
  const int n = pd.n;
  const Ten4 full = rm.assemble_full();
  // frame inverse metric diag(1/w, g^ij)
  Mat inv(n + 1);
  inv(0, 0) = 1.0 / pd.w();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i + 1, j + 1) = pd.ginv(i, j);

  Mat ric(n + 1);
  for (int b = 0; b < n + 1; ++b)
    for (int d = 0; d < n + 1; ++d) {
      double s = 0.0;
      for (int a = 0; a < n + 1; ++a)
        for (int c = 0; c < n + 1; ++c) s += inv(a, c) * full(a, b, c, d);
      ric(b, d) = s;
    }

  RicciBlocks r;
  r.ric00 = ric(0, 0);
  r.ric0j = Vec(n);
  for (int j = 0; j < n; ++j) r.ric0j[j] = ric(0, j + 1);
  r.ricij = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.ricij(i, j) = ric(i + 1, j + 1);
  return r;
}

RicciBlocks hat_ricci_blocks(const StationarySpacetime& S, const Vec& p) {
  if (S.branch != Branch::lorentzian) throw ParameterError("hat_ricci_blocks expects the lorentzian branch");
  const PointData pd = eval_point(S, p);
  const RicciBlocks bar = ricci_blocks(pd);
  const int n = pd.n;
  const double u2 = pd.u * pd.u;

  RicciBlocks hat;
  hat.ric00 = 0.5 * u2 * u2 * pd.norm2_lambda2() - bar.ric00;
  hat.ric0j = -1.0 * bar.ric0j;
  hat.ricij = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double lam_sq = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lam_sq += pd.ginv(k, l) * pd.lambda2(i, k) * pd.lambda2(j, l);
      hat.ricij(i, j) = -u2 * lam_sq + bar.ricij(i, j);
    }
  return hat;
}

FrameGeometry frame_geometry(const StationarySpacetime& S, const Vec& p) {
  const PointData pd = eval_point(S, p);
  FrameGeometry fg;
  fg.lambda2 = pd.lambda2;
  fg.conn = frame_connection(pd);
  fg.rm = curvature_blocks(pd);
  fg.ric = ricci_blocks(pd);
  return fg;
}

double horizontal_laplacian(const PointData& pd, const Vec& df, const Mat& ddf) {
  const Mat h = pd.covariant_hessian(df, ddf);
  double s = 0.0;
  for (int i = 0; i < pd.n; ++i)
    for (int j = 0; j < pd.n; ++j) s += pd.ginv(i, j) * h(i, j);
  return s;
}

HessLap hessian_laplacian(const PointData& pd, const Vec& df, const Mat& ddf) {
  const int n = pd.n;
  const double w = pd.w();
  const Vec dw = pd.dw();

  HessLap out;
  out.h00 = 0.5 * inner(pd.ginv, dw, df);
  out.h0j = Vec(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) s += pd.ginv(k, l) * pd.lambda2(j, k) * df[l];
    out.h0j[j] = -0.5 * w * s;
  }
  out.hij = pd.covariant_hessian(df, ddf);
  out.laplacian = horizontal_laplacian(pd, df, ddf) + 0.5 * inner(pd.ginv, dw, df) / w;
  return out;
}

HessLap hessian_laplacian(const StationarySpacetime& S, const ScalarField& f, const Vec& p) {
  return hessian_laplacian(eval_point(S, p), f.grad(p), f.hess(p));
}

ConformalData conformal_reduction(const StationarySpacetime& S, const Vec& p) {
  const PointData pd = eval_point(S, p);
  const int n = pd.n;
  if (n < 3) throw DimensionError("conformal reduction requires n >= 3");

  ConformalData cd;
  cd.conformal_factor = std::pow(pd.u, 2.0 / (n - 2));
  cd.gtil = cd.conformal_factor * pd.g;

  // d_i log u and its covariant Hessian
  Vec dlogu(n);
  for (int i = 0; i < n; ++i) dlogu[i] = pd.du[i] / pd.u;
  Mat dd_logu(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dd_logu(i, j) = pd.ddu(i, j) / pd.u - pd.du[i] * pd.du[j] / (pd.u * pd.u);
  const Mat hess_logu = pd.covariant_hessian(dlogu, dd_logu);

  cd.gamma_til = pd.gamma;
  const Vec dlogu_up = matvec(pd.ginv, dlogu);
  const double c = 1.0 / (n - 2);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cd.gamma_til(k, i, j) += c * (dlogu[i] * (j == k ? 1.0 : 0.0) +
                                      dlogu[j] * (i == k ? 1.0 : 0.0) -
                                      dlogu_up[k] * pd.g(i, j));

  const Mat ric_g = horizontal_ricci(pd);
  const double lap_u = horizontal_laplacian(pd, pd.du, pd.ddu);
  cd.ric_til = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cd.ric_til(i, j) = ric_g(i, j) - hess_logu(i, j) + c * dlogu[i] * dlogu[j] -
                         c * (lap_u / pd.u) * pd.g(i, j);
  return cd;
}

double conformal_laplacian(const ConformalData& cd, const PointData& pd, const Vec& dL,
                           const Mat& ddL) {
  const int n = pd.n;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double h = ddL(i, j);
      for (int k = 0; k < n; ++k) h -= cd.gamma_til(k, i, j) * dL[k];
      s += (pd.ginv(i, j) / cd.conformal_factor) * h;
    }
  return s;
}

std::pair<double, double> static_system_residual(const StationarySpacetime& S, const Vec& p) {
  const PointData pd = eval_point(S, p);
  if (max_abs(pd.lambda2) >= 1e-10) throw NotStaticError("shift has curl; static system undefined");
  if (!S.lambda) throw ParameterError("static system residual needs the Einstein constant");
  const double lambda = *S.lambda;
  const int n = pd.n;

  const Mat ric_g = horizontal_ricci(pd);
  const Mat hess_u = pd.covariant_hessian(pd.du, pd.ddu);
  Mat res(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res(i, j) = ric_g(i, j) - hess_u(i, j) / pd.u - lambda * pd.g(i, j);

  const double lap_u = horizontal_laplacian(pd, pd.du, pd.ddu);
  return {max_abs(res), std::abs(lap_u + lambda * pd.u)};
}

}  // namespace statgeo
