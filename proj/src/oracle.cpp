#include "statgeo/oracle.hpp"

#include <cmath>

namespace statgeo {

namespace {

// The spatial chart point is x^1..x^n of the full coordinate point (t, x).
Vec spatial_part(const Vec& p, int n) {
  Vec q(n);
  for (int i = 0; i < n; ++i) q[i] = p[i + 1];
  return q;
}

double step_for(const CoordinateMetric& m, const Vec& p, int axis) {
  return std::max(m.fd_step, m.fd_step * std::abs(p[axis]));
}

}  // namespace

CoordinateMetric spacetime_coordinate_metric(const StationarySpacetime& S) {
  CoordinateMetric m;
  m.dim = S.n + 1;
  m.negative_eigenvalues = (S.branch == Branch::lorentzian) ? 1 : 0;
  m.components = [S](const Vec& p) { return metric_components(S, spatial_part(p, S.n)); };
  m.domain = [S](const Vec& p, double margin) { return S.domain(spatial_part(p, S.n), margin); };
  return m;
}

CoordinateMetric horizontal_coordinate_metric(const StationarySpacetime& S) {
  CoordinateMetric m;
  m.dim = S.n;
  m.components = [S](const Vec& p) {
    Mat g(S.n);
    for (int i = 0; i < S.n; ++i)
      for (int j = 0; j < S.n; ++j) g(i, j) = S.g[i * S.n + j].value(p);
    return g;
  };
  m.domain = S.domain;
  return m;
}

CoordinateMetric conformal_coordinate_metric(const StationarySpacetime& S) {
  if (S.n < 3) throw DimensionError("conformal metric requires n >= 3");
  CoordinateMetric m;
  m.dim = S.n;
  m.components = [S](const Vec& p) {
    const double factor = std::pow(S.u.value(p), 2.0 / (S.n - 2));
    Mat g(S.n);
    for (int i = 0; i < S.n; ++i)
      for (int j = 0; j < S.n; ++j) g(i, j) = factor * S.g[i * S.n + j].value(p);
    return g;
  };
  m.domain = S.domain;
  return m;
}

Ten3 metric_partials(const CoordinateMetric& m, const Vec& p) {
  const int d = m.dim;
  Ten3 dg(d);
  for (int k = 0; k < d; ++k) {
    const double h = step_for(m, p, k);
    if (!m.domain(p, h)) throw DomainError("oracle stencil leaves chart domain");
    // Richardson on the whole component matrix at once.
    std::array<Mat, 8> tab;
    for (int lev = 0; lev < m.richardson_levels; ++lev) {
      const double hk = h / (1 << lev);
      Vec pp = p, pm = p;
      pp[k] += hk;
      pm[k] -= hk;
      tab[lev] = (1.0 / (2.0 * hk)) * (m.components(pp) - m.components(pm));
    }
    for (int j = 1; j < m.richardson_levels; ++j) {
      const double wgt = std::pow(4.0, j);
      for (int lev = m.richardson_levels - 1; lev >= j; --lev)
        tab[lev] = (1.0 / (wgt - 1.0)) * (wgt * tab[lev] - tab[lev - 1]);
    }
    const Mat& dk = tab[m.richardson_levels - 1];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) dg(k, a, b) = dk(a, b);
  }
  return dg;
}

Ten4 metric_second_partials(const CoordinateMetric& m, const Vec& p) {
  const int d = m.dim;
  Ten4 ddg(d);
  for (int k = 0; k < d; ++k)
    for (int l = k; l < d; ++l) {
      const double h = std::max(step_for(m, p, k), step_for(m, p, l));
      if (!m.domain(p, 2.0 * h)) throw DomainError("oracle stencil leaves chart domain");
      std::array<Mat, 8> tab;
      for (int lev = 0; lev < m.richardson_levels; ++lev) {
        const double hk = h / (1 << lev);
        if (k == l) {
          Vec pp = p, pm = p;
          pp[k] += hk;
          pm[k] -= hk;
          tab[lev] = (1.0 / (hk * hk)) *
                     (m.components(pp) - 2.0 * m.components(p) + m.components(pm));
        } else {
          Vec pp = p, pm = p, mp = p, mm = p;
          pp[k] += hk; pp[l] += hk;
          pm[k] += hk; pm[l] -= hk;
          mp[k] -= hk; mp[l] += hk;
          mm[k] -= hk; mm[l] -= hk;
          tab[lev] = (1.0 / (4.0 * hk * hk)) *
                     (m.components(pp) - m.components(pm) - m.components(mp) + m.components(mm));
        }
      }
      for (int j = 1; j < m.richardson_levels; ++j) {
        const double wgt = std::pow(4.0, j);
        for (int lev = m.richardson_levels - 1; lev >= j; --lev)
          tab[lev] = (1.0 / (wgt - 1.0)) * (wgt * tab[lev] - tab[lev - 1]);
      }
      const Mat& dd = tab[m.richardson_levels - 1];
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          ddg(k, l, a, b) = dd(a, b);
          ddg(l, k, a, b) = dd(a, b);
        }
    }
  return ddg;
}

Ten3 coordinate_christoffels(const CoordinateMetric& m, const Vec& p) {
  const Mat g = m.components(p);
  const double dg_det = det(g);
  if (dg_det == 0.0 || !std::isfinite(dg_det))
    throw SingularMetricError("oracle metric degenerate");
  const Mat ginv = inverse(g);
  return christoffels_from_partials(ginv, metric_partials(m, p));
}

Ten4 coordinate_riemann(const CoordinateMetric& m, const Vec& p) {
  const int d = m.dim;
  const Mat g = m.components(p);
  const Mat ginv = inverse(g);
  const Ten3 dg = metric_partials(m, p);
  const Ten4 ddg = metric_second_partials(m, p);
  const Ten3 gamma = christoffels_from_partials(ginv, dg);

  Ten4 rm(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          double s = 0.5 * (ddg(b, c, a, e) + ddg(a, e, b, c) - ddg(b, e, a, c) - ddg(a, c, b, e));
          for (int f = 0; f < d; ++f)
            for (int q = 0; q < d; ++q)
              s += g(f, q) * (gamma(f, b, c) * gamma(q, a, e) - gamma(f, b, e) * gamma(q, a, c));
          rm(a, b, c, e) = s;
        }
  return rm;
}

Mat coordinate_ricci(const CoordinateMetric& m, const Vec& p) {
  const int d = m.dim;
  const Mat ginv = inverse(m.components(p));
  const Ten4 rm = coordinate_riemann(m, p);
  Mat ric(d);
  for (int b = 0; b < d; ++b)
    for (int e = 0; e < d; ++e) {
      double s = 0.0;
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c) s += ginv(a, c) * rm(a, b, c, e);
      ric(b, e) = s;
    }
  return ric;
}

double riemann_norm2(const Ten4& rm, const Mat& ginv) {
  const int d = rm.size();
  double s = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          double up = 0.0;  // Rm with all indices raised at (a,b,c,e)
          for (int a2 = 0; a2 < d; ++a2)
            for (int b2 = 0; b2 < d; ++b2)
              for (int c2 = 0; c2 < d; ++c2)
                for (int e2 = 0; e2 < d; ++e2)
                  up += ginv(a, a2) * ginv(b, b2) * ginv(c, c2) * ginv(e, e2) *
                        rm(a2, b2, c2, e2);
          s += up * rm(a, b, c, e);
        }
  return s;
}

FrameMap adapted_frame(const StationarySpacetime& S, const Vec& p) {
  const int n = S.n;
  FrameMap f;
  f.dim = n + 1;
  f.basis = Mat(n + 1);
  f.basis(0, 0) = 1.0;                      // e_0 = d/dt
  for (int i = 0; i < n; ++i) {
    f.basis(0, i + 1) = -S.theta[i].value(p);  // e_i = d/dx^i - theta_i d/dt
    f.basis(i + 1, i + 1) = 1.0;
  }
  f.basis_inv = inverse(f.basis);
  return f;
}

namespace {
const Mat& pick(const FrameMap& f, bool inverse) { return inverse ? f.basis_inv : f.basis; }
}  // namespace

Vec frame_transform1(const Vec& t, const FrameMap& f, bool inverse) {
  const int d = f.dim;
  if (t.size() != d) throw ValenceError("frame transform: size mismatch");
  const Mat& e = pick(f, inverse);
  Vec r(d);
  for (int al = 0; al < d; ++al) {
    double s = 0.0;
    for (int a = 0; a < d; ++a) s += e(a, al) * t[a];
    r[al] = s;
  }
  return r;
}

Mat frame_transform2(const Mat& t, const FrameMap& f, bool inverse) {
  const int d = f.dim;
  if (t.size() != d) throw ValenceError("frame transform: size mismatch");
  const Mat& e = pick(f, inverse);
  Mat r(d);
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      double s = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) s += e(a, al) * e(b, be) * t(a, b);
      r(al, be) = s;
    }
  return r;
}

Ten3 frame_transform3(const Ten3& t, const FrameMap& f, bool inverse) {
  const int d = f.dim;
  if (t.size() != d) throw ValenceError("frame transform: size mismatch");
  const Mat& e = pick(f, inverse);
  Ten3 r(d);
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be)
      for (int ga = 0; ga < d; ++ga) {
        double s = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) s += e(a, al) * e(b, be) * e(c, ga) * t(a, b, c);
        r(al, be, ga) = s;
      }
  return r;
}

Ten4 frame_transform4(const Ten4& t, const FrameMap& f, bool inverse) {
  const int d = f.dim;
  if (t.size() != d) throw ValenceError("frame transform: size mismatch");
  const Mat& e = pick(f, inverse);
  Ten4 r(d);
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be)
      for (int ga = 0; ga < d; ++ga)
        for (int de = 0; de < d; ++de) {
          double s = 0.0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              for (int c = 0; c < d; ++c)
                for (int ee = 0; ee < d; ++ee)
                  s += e(a, al) * e(b, be) * e(c, ga) * e(ee, de) * t(a, b, c, ee);
          r(al, be, ga, de) = s;
        }
  return r;
}

}  // namespace statgeo
