#include "statgeo/spacetime.hpp"

#include <cmath>

namespace statgeo {

Ten3 PointData::grad_lambda2() const {
  Ten3 dl(n);
  // coordinate partial d_k Lambda_ij = d_k d_i theta_j - d_k d_j theta_i
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = ddtheta[j](k, i) - ddtheta[i](k, j);
        for (int l = 0; l < n; ++l)
          s -= gamma(l, k, i) * lambda2(l, j) + gamma(l, k, j) * lambda2(i, l);
        dl(k, i, j) = s;
      }
  return dl;
}

PointData eval_point(const StationarySpacetime& S, const Vec& p) {
  if (!S.domain(p, 0.0)) throw DomainError("point outside chart domain");
  const int n = S.n;
  PointData pd;
  pd.n = n;
  pd.w_sign = S.w_sign();
  pd.p = p;

  pd.u = S.u.value(p);
  if (!(pd.u > kMinLapse)) throw SingularMetricError("lapse below threshold");
  pd.du = S.u.grad(p);
  pd.ddu = S.u.hess(p);

  pd.theta = Vec(n);
  pd.dtheta = Mat(n);
  pd.ddtheta.resize(n);
  for (int j = 0; j < n; ++j) {
    pd.theta[j] = S.theta[j].value(p);
    const Vec dth = S.theta[j].grad(p);
    for (int i = 0; i < n; ++i) pd.dtheta(i, j) = dth[i];
    pd.ddtheta[j] = S.theta[j].hess(p);
  }

  pd.g = Mat(n);
  pd.dg = Ten3(n);
  pd.ddg = Ten4(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto& f = S.g[i * n + j];
      const double v = f.value(p);
      pd.g(i, j) = pd.g(j, i) = v;
      const Vec gr = f.grad(p);
      const Mat he = f.hess(p);
      for (int k = 0; k < n; ++k) {
        pd.dg(k, i, j) = pd.dg(k, j, i) = gr[k];
        for (int l = 0; l < n; ++l) {
          pd.ddg(k, l, i, j) = pd.ddg(k, l, j, i) = he(k, l);
        }
      }
    }

  pd.detg = det(pd.g);
  if (!(pd.detg > kMinDetG)) throw SingularMetricError("det g below threshold");
  pd.ginv = inverse(pd.g);
  pd.gamma = christoffels_from_partials(pd.ginv, pd.dg);

  pd.lambda2 = Mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pd.lambda2(i, j) = pd.dtheta(i, j) - pd.dtheta(j, i);

  return pd;
}

Mat metric_components(const StationarySpacetime& S, const Vec& p) {
  if (!S.domain(p, 0.0)) throw DomainError("point outside chart domain");
  const int n = S.n;
  const double u = S.u.value(p);
  if (!(u > kMinLapse)) throw SingularMetricError("lapse below threshold");
  const double w = S.w_sign() * u * u;
  Mat gbar(n + 1);
  gbar(0, 0) = w;
  for (int i = 0; i < n; ++i) {
    const double ti = S.theta[i].value(p);
    gbar(0, i + 1) = gbar(i + 1, 0) = w * ti;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gbar(i + 1, j + 1) = S.g[i * n + j].value(p) +
                           w * S.theta[i].value(p) * S.theta[j].value(p);
  return gbar;
}

Mat inverse_metric_components(const StationarySpacetime& S, const Vec& p) {
  if (!S.domain(p, 0.0)) throw DomainError("point outside chart domain");
  const int n = S.n;
  const double u = S.u.value(p);
  if (!(u > kMinLapse)) throw SingularMetricError("lapse below threshold");
  const double w = S.w_sign() * u * u;

  Mat g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = S.g[i * n + j].value(p);
  if (!(det(g) > kMinDetG)) throw SingularMetricError("det g below threshold");
  const Mat ginv = inverse(g);

  Vec theta(n);
  for (int i = 0; i < n; ++i) theta[i] = S.theta[i].value(p);
  const Vec theta_up = matvec(ginv, theta);

  Mat inv(n + 1);
  inv(0, 0) = 1.0 / w + dot(theta_up, theta);
  for (int i = 0; i < n; ++i) inv(0, i + 1) = inv(i + 1, 0) = -theta_up[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i + 1, j + 1) = ginv(i, j);
  return inv;
}

StationarySpacetime hat_metric(const StationarySpacetime& S) {
  StationarySpacetime hat = S;
  hat.branch = (S.branch == Branch::lorentzian) ? Branch::riemannian : Branch::lorentzian;
  return hat;
}

Ten4 horizontal_riemann(const PointData& pd) {
  const int n = pd.n;
  Ten4 rm(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.5 * (pd.ddg(j, k, i, l) + pd.ddg(i, l, j, k) -
                            pd.ddg(j, l, i, k) - pd.ddg(i, k, j, l));
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              s += pd.g(e, f) *
                   (pd.gamma(e, j, k) * pd.gamma(f, i, l) - pd.gamma(e, j, l) * pd.gamma(f, i, k));
          rm(i, j, k, l) = s;
        }
  return rm;
}

Mat horizontal_ricci(const PointData& pd) {
  const int n = pd.n;
  const Ten4 rm = horizontal_riemann(pd);
  Mat ric(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += pd.ginv(k, l) * rm(k, i, l, j);
      ric(i, j) = s;
    }
  return ric;
}

}  // namespace statgeo
