// statgeo - small dense vectors, matrices and rank-3/4 tensors
//
// Everything here is sized at runtime but capped at kMaxDim so values live on
// the stack and are cheap to copy around point loops.

#ifndef STATGEO_LINALG_HPP_
#define STATGEO_LINALG_HPP_

#include <array>
#include <cmath>
#include <cstdlib>

#include "statgeo/errors.hpp"

namespace statgeo {

inline constexpr int kMaxDim = 6;

class Vec {
 public:
  Vec() = default;
  explicit Vec(int n, double fill = 0.0) : n_(n) { v_.fill(0.0); for (int i = 0; i < n; ++i) v_[i] = fill; }
  Vec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
    v_.fill(0.0);
    int i = 0;
    for (double x : xs) v_[i++] = x;
  }

  int size() const { return n_; }
  double& operator[](int i) { return v_[i]; }
  double operator[](int i) const { return v_[i]; }

  Vec& operator+=(const Vec& o) { for (int i = 0; i < n_; ++i) v_[i] += o.v_[i]; return *this; }
  Vec& operator-=(const Vec& o) { for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i]; return *this; }
  Vec& operator*=(double c) { for (int i = 0; i < n_; ++i) v_[i] *= c; return *this; }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double c, Vec a) { return a *= c; }
  friend Vec operator*(Vec a, double c) { return a *= c; }

 private:
  int n_ = 0;
  std::array<double, kMaxDim> v_{};
};

class Mat {
 public:
  Mat() = default;
  explicit Mat(int n, double fill = 0.0) : n_(n) { m_.fill(0.0); for (int i = 0; i < n * n; ++i) m_[i] = fill; }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int size() const { return n_; }
  double& operator()(int i, int j) { return m_[i * n_ + j]; }
  double operator()(int i, int j) const { return m_[i * n_ + j]; }

  Mat& operator+=(const Mat& o) { for (int i = 0; i < n_ * n_; ++i) m_[i] += o.m_[i]; return *this; }
  Mat& operator-=(const Mat& o) { for (int i = 0; i < n_ * n_; ++i) m_[i] -= o.m_[i]; return *this; }
  Mat& operator*=(double c) { for (int i = 0; i < n_ * n_; ++i) m_[i] *= c; return *this; }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double c, Mat a) { return a *= c; }
  friend Mat operator*(Mat a, double c) { return a *= c; }

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim> m_{};
};

// T(a,i,j); used for Christoffels (upper index first) and d_k g_ij stacks.
class Ten3 {
 public:
  Ten3() = default;
  explicit Ten3(int n) : n_(n) { t_.fill(0.0); }

  int size() const { return n_; }
  double& operator()(int a, int i, int j) { return t_[(a * n_ + i) * n_ + j]; }
  double operator()(int a, int i, int j) const { return t_[(a * n_ + i) * n_ + j]; }

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim * kMaxDim> t_{};
};

class Ten4 {
 public:
  Ten4() = default;
  explicit Ten4(int n) : n_(n) { t_.fill(0.0); }

  int size() const { return n_; }
  double& operator()(int a, int b, int c, int d) { return t_[((a * n_ + b) * n_ + c) * n_ + d]; }
  double operator()(int a, int b, int c, int d) const { return t_[((a * n_ + b) * n_ + c) * n_ + d]; }

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim * kMaxDim * kMaxDim> t_{};
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// <a,b>_g = g^{ij} a_i b_j for covectors (pass the inverse metric).
inline double inner(const Mat& ginv, const Vec& a, const Vec& b) {
  double s = 0.0;
  const int n = ginv.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += ginv(i, j) * a[i] * b[j];
  return s;
}

inline Vec matvec(const Mat& m, const Vec& v) {
  const int n = m.size();
  Vec r(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const int n = a.size();
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline double max_abs(const Vec& v) {
  double m = 0.0;
  for (int i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

inline double max_abs(const Mat& m) {
  double r = 0.0;
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

inline double max_abs(const Ten3& t) {
  double r = 0.0;
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r = std::max(r, std::abs(t(a, i, j)));
  return r;
}

inline double max_abs(const Ten4& t) {
  double r = 0.0;
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) r = std::max(r, std::abs(t(a, b, c, d)));
  return r;
}

// LU with partial pivoting; small dims only.
struct LU {
  Mat lu;
  std::array<int, kMaxDim> perm{};
  double det = 0.0;
};

inline LU lu_decompose(Mat m) {
  const int n = m.size();
  LU f;
  f.det = 1.0;
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(f.perm[piv], f.perm[col]);
      f.det = -f.det;
    }
    const double d = m(col, col);
    f.det *= d;
    if (d == 0.0) continue;
    for (int r = col + 1; r < n; ++r) {
      m(r, col) /= d;
      const double factor = m(r, col);
      for (int j = col + 1; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  f.lu = m;
  return f;
}

inline double det(const Mat& m) { return lu_decompose(m).det; }

inline Mat inverse(const Mat& m) {
  const int n = m.size();
  const LU f = lu_decompose(m);
  if (f.det == 0.0 || !std::isfinite(f.det)) throw SingularMetricError("matrix not invertible");
  Mat inv(n);
  for (int col = 0; col < n; ++col) {
    Vec b(n);
    b[col] = 1.0;
    // Pb, forward, backward.
    Vec y(n);
    for (int i = 0; i < n; ++i) {
      double s = b[f.perm[i]];
      for (int j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
      y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = y[i];
      for (int j = i + 1; j < n; ++j) s -= f.lu(i, j) * inv(j, col);
      inv(i, col) = s / f.lu(i, i);
    }
  }
  return inv;
}

// Symmetric positive-definite check through the pivots of an LDL-free LU.
inline bool positive_definite(const Mat& m) {
  const int n = m.size();
  Mat a = m;
  for (int k = 0; k < n; ++k) {
    if (a(k, k) <= 0.0) return false;
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace statgeo

#endif
