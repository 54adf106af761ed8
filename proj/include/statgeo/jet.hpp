// statgeo - second-order forward jets
//
// A Jet carries (value, gradient, Hessian) with respect to the chart
// coordinates. Catalog metric functions are written once against a generic
// scalar type and evaluated either on doubles (fast value path) or on jets
// (exact first and second partials, no symbolic algebra involved).

#ifndef STATGEO_JET_HPP_
#define STATGEO_JET_HPP_

#include <cmath>

#include "statgeo/linalg.hpp"

namespace statgeo {

struct Jet {
  int n = 0;
  double v = 0.0;
  Vec d;   // gradient
  Mat h;   // Hessian

  Jet() = default;
  Jet(int n_, double v_) : n(n_), v(v_), d(n_), h(n_) {}

  static Jet variable(int n, int axis, double value) {
    Jet j(n, value);
    j.d[axis] = 1.0;
    return j;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r(a.n, a.v + b.v);
  r.d = a.d + b.d;
  r.h = a.h + b.h;
  return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r(a.n, a.v - b.v);
  r.d = a.d - b.d;
  r.h = a.h - b.h;
  return r;
}
inline Jet operator-(const Jet& a) {
  Jet r(a.n, -a.v);
  r.d = -1.0 * a.d;
  r.h = -1.0 * a.h;
  return r;
}
inline Jet operator+(const Jet& a, double c) { Jet r = a; r.v += c; return r; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return a + (-c); }
inline Jet operator-(double c, const Jet& a) { return (-a) + c; }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.n, a.v * b.v);
  r.d = b.v * a.d + a.v * b.d;
  r.h = b.v * a.h + a.v * b.h;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.h(i, j) += a.d[i] * b.d[j] + b.d[i] * a.d[j];
  return r;
}
inline Jet operator*(const Jet& a, double c) {
  Jet r(a.n, a.v * c);
  r.d = c * a.d;
  r.h = c * a.h;
  return r;
}
inline Jet operator*(double c, const Jet& a) { return a * c; }

// Chain rule for a scalar map f applied to a jet.
inline Jet compose(const Jet& a, double f, double fp, double fpp) {
  Jet r(a.n, f);
  r.d = fp * a.d;
  r.h = fp * a.h;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r.h(i, j) += fpp * a.d[i] * a.d[j];
  return r;
}

inline Jet inv(const Jet& a) {
  const double iv = 1.0 / a.v;
  return compose(a, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
inline Jet operator/(const Jet& a, double c) { return a * (1.0 / c); }
inline Jet operator/(double c, const Jet& a) { return inv(a) * c; }

inline Jet sqrt(const Jet& a) {
  const double s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet sin(const Jet& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet cos(const Jet& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }
inline Jet exp(const Jet& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet log(const Jet& a) { return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v)); }
inline Jet pow(const Jet& a, double p) {
  const double f = std::pow(a.v, p);
  return compose(a, f, p * f / a.v, p * (p - 1.0) * f / (a.v * a.v));
}

// Seed a full set of coordinate jets at p.
inline void seed_jets(const Vec& p, Jet* out) {
  for (int i = 0; i < p.size(); ++i) out[i] = Jet::variable(p.size(), i, p[i]);
}

}  // namespace statgeo

#endif
