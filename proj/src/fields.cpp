#include "statgeo/fields.hpp"

#include <cmath>

namespace statgeo {

ScalarField make_constant_field(std::string name, int n, double c, Domain domain) {
  ScalarField s;
  s.name = std::move(name);
  s.domain = std::move(domain);
  s.value = [c](const Vec&) { return c; };
  s.grad = [n](const Vec&) { return Vec(n); };
  s.hess = [n](const Vec&) { return Mat(n); };
  return s;
}

namespace {

Vec shifted(Vec p, int axis, double dx) {
  p[axis] += dx;
  return p;
}

}  // namespace

double richardson_d1(const std::function<double(const Vec&)>& fn, const Vec& p, int axis,
                     double h, int levels) {
  // D(h), D(h/2), ... combined with the standard 4^k weights.
  std::array<double, 8> tab{};
  for (int k = 0; k < levels; ++k) {
    const double hk = h / (1 << k);
    tab[k] = (fn(shifted(p, axis, hk)) - fn(shifted(p, axis, -hk))) / (2.0 * hk);
  }
  for (int j = 1; j < levels; ++j) {
    const double w = std::pow(4.0, j);
    for (int k = levels - 1; k >= j; --k) tab[k] = (w * tab[k] - tab[k - 1]) / (w - 1.0);
  }
  return tab[levels - 1];
}

double richardson_d2(const std::function<double(const Vec&)>& fn, const Vec& p, int a, int b,
                     double h, int levels) {
  std::array<double, 8> tab{};
  for (int k = 0; k < levels; ++k) {
    const double hk = h / (1 << k);
    if (a == b) {
      tab[k] = (fn(shifted(p, a, hk)) - 2.0 * fn(p) + fn(shifted(p, a, -hk))) / (hk * hk);
    } else {
      const Vec pp = shifted(shifted(p, a, hk), b, hk);
      const Vec pm = shifted(shifted(p, a, hk), b, -hk);
      const Vec mp = shifted(shifted(p, a, -hk), b, hk);
      const Vec mm = shifted(shifted(p, a, -hk), b, -hk);
      tab[k] = (fn(pp) - fn(pm) - fn(mp) + fn(mm)) / (4.0 * hk * hk);
    }
  }
  for (int j = 1; j < levels; ++j) {
    const double w = std::pow(4.0, j);
    for (int k = levels - 1; k >= j; --k) tab[k] = (w * tab[k] - tab[k - 1]) / (w - 1.0);
  }
  return tab[levels - 1];
}

ScalarField make_numeric_field(std::string name, std::function<double(const Vec&)> value,
                               FDPolicy policy, Domain domain) {
  ScalarField s;
  s.name = std::move(name);
  s.domain = domain;
  s.value = value;
  s.grad = [value, policy, domain](const Vec& p) {
    const int n = p.size();
    Vec g(n);
    for (int i = 0; i < n; ++i) {
      const double h = policy.step_for(p[i]);
      if (!domain(p, h)) throw DomainError("gradient stencil leaves chart domain");
      g[i] = richardson_d1(value, p, i, h, policy.richardson_levels);
    }
    return g;
  };
  s.hess = [value, policy, domain](const Vec& p) {
    const int n = p.size();
    Mat h(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double step = std::max(policy.step_for(p[i]), policy.step_for(p[j]));
        if (!domain(p, step)) throw DomainError("Hessian stencil leaves chart domain");
        h(i, j) = h(j, i) = richardson_d2(value, p, i, j, step, policy.richardson_levels);
      }
    return h;
  };
  return s;
}

double partial(const ScalarField& field, const Vec& p, std::span<const int> axes,
               const FDPolicy& policy) {
  const int order = static_cast<int>(axes.size());
  if (order < 1 || order > policy.max_order || order > 4)
    throw OrderError("derivative order " + std::to_string(order) + " outside policy");
  if (!field.domain(p, 0.0)) throw DomainError("point outside chart domain");

  if (order == 1) return field.grad(p)[axes[0]];
  if (order == 2) return field.hess(p)(axes[0], axes[1]);

  // Orders 3 and 4: finite differences on the analytic Hessian entry (a, b).
  const int a = axes[0], b = axes[1];
  const auto hab = [&field, a, b](const Vec& q) { return field.hess(q)(a, b); };
  const int c = axes[2];
  double h = policy.step_for(p[c]);
  if (order == 4) h = std::max(h, policy.step_for(p[axes[3]]));
  if (!field.domain(p, h)) throw DomainError("FD stencil leaves chart domain");

  if (order == 3) return richardson_d1(hab, p, c, h, policy.richardson_levels);
  return richardson_d2(hab, p, c, axes[3], h, policy.richardson_levels);
}

Mat eval_matrix(std::span<const ScalarField> entries, int n, const Vec& p) {
  Mat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entries[i * n + j].value(p);
  return m;
}

Ten3 christoffels_from_partials(const Mat& ginv, const Ten3& dg) {
  const int n = ginv.size();
  Ten3 gamma(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        gamma(k, i, j) = gamma(k, j, i) = 0.5 * s;
      }
  return gamma;
}

Mat covariant_derivative_1form(std::span<const ScalarField> theta,
                               std::span<const ScalarField> g_entries, int n, const Vec& p) {
  const Mat g = eval_matrix(g_entries, n, p);
  const double dg_det = det(g);
  if (dg_det <= 0.0) throw SingularMetricError("det g <= 0 in covariant derivative");
  const Mat ginv = inverse(g);

  Ten3 dg(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec grad_ij = g_entries[i * n + j].grad(p);
      for (int k = 0; k < n; ++k) dg(k, i, j) = grad_ij[k];
    }
  const Ten3 gamma = christoffels_from_partials(ginv, dg);

  Mat result(n);
  for (int j = 0; j < n; ++j) {
    const Vec dtheta_j = theta[j].grad(p);
    for (int i = 0; i < n; ++i) {
      double s = dtheta_j[i];
      for (int k = 0; k < n; ++k) s -= gamma(k, i, j) * theta[k].value(p);
      result(i, j) = s;
    }
  }
  return result;
}

}  // namespace statgeo
