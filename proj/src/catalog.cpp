#include "statgeo/catalog.hpp"

#include <cmath>
#include <random>

namespace statgeo {

namespace {

using std::cos;
using std::sin;
using std::sqrt;

constexpr double kPi = 3.14159265358979323846;

std::vector<ScalarField> zero_shift(int n, const Domain& dom) {
  std::vector<ScalarField> theta;
  for (int i = 0; i < n; ++i)
    theta.push_back(make_constant_field("theta_" + std::to_string(i), n, 0.0, dom));
  return theta;
}

std::vector<ScalarField> constant_metric(int n, const Mat& g, const Domain& dom) {
  std::vector<ScalarField> fields;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fields.push_back(make_constant_field("g_" + std::to_string(i) + std::to_string(j), n,
                                           g(i, j), dom));
  return fields;
}

}  // namespace

CatalogEntry make_minkowski_static() {
  CatalogEntry e;
  e.name = "minkowski-static";
  const Domain dom = everywhere();
  e.S.n = 3;
  e.S.u = make_constant_field("u", 3, 1.0, dom);
  e.S.theta = zero_shift(3, dom);
  e.S.g = constant_metric(3, Mat::identity(3), dom);
  e.S.lambda = 0.0;
  e.S.domain = dom;
  e.lambda = 0.0;
  e.is_static = e.vacuum = e.einstein = e.flat = true;
  e.anchors = {Vec{0.0, 0.0, 0.0}, Vec{1.0, -2.0, 0.5}};
  e.box_lo = Vec{-2.0, -2.0, -2.0};
  e.box_hi = Vec{2.0, 2.0, 2.0};
  e.twist_anchor = Vec{0.0, 0.0, 0.0};
  return e;
}

CatalogEntry make_minkowski_rotating(double omega) {
  if (!(omega > 0.0)) throw ParameterError("rotating chart needs Omega > 0");
  CatalogEntry e;
  e.name = "minkowski-rotating";
  e.params["omega"] = omega;
  const double rho_max = 1.0 / omega;
  const Domain dom = [rho_max](const Vec& p, double m) {
    return p[0] > 0.025 * rho_max + m && p[0] < rho_max * 0.975 - m;
  };
  e.S.n = 3;
  const double w2 = omega * omega;
  e.S.u = make_field("u", 3, [w2](const auto& x) { return sqrt(1.0 - w2 * x[0] * x[0]); }, dom);
  e.S.theta.push_back(make_constant_field("theta_rho", 3, 0.0, dom));
  e.S.theta.push_back(make_field("theta_phi", 3,
                                 [omega, w2](const auto& x) {
                                   auto rho2 = x[0] * x[0];
                                   return omega * rho2 / (1.0 - w2 * rho2);
                                 },
                                 dom));
  e.S.theta.push_back(make_constant_field("theta_z", 3, 0.0, dom));
  for (int i = 0; i < 9; ++i) e.S.g.push_back(make_constant_field("g", 3, 0.0, dom));
  e.S.g[0] = make_constant_field("g_rr", 3, 1.0, dom);
  e.S.g[4] = make_field("g_pp", 3,
                        [w2](const auto& x) {
                          auto rho2 = x[0] * x[0];
                          return rho2 / (1.0 - w2 * rho2);
                        },
                        dom);
  e.S.g[8] = make_constant_field("g_zz", 3, 1.0, dom);
  e.S.lambda = 0.0;
  e.S.domain = dom;
  e.lambda = 0.0;
  e.vacuum = e.einstein = e.flat = true;
  e.is_static = false;
  e.anchors = {Vec{0.25 * rho_max, 0.3, 0.0}, Vec{0.4 * rho_max, 1.2, 0.4}};
  e.box_lo = Vec{0.1 * rho_max, 0.0, -1.0};
  e.box_hi = Vec{0.6 * rho_max, 2.0 * kPi, 1.0};
  e.twist_anchor = Vec{0.25 * rho_max, 0.0, 0.0};
  return e;
}

CatalogEntry make_schwarzschild(double M) {
  if (!(M > 0.0)) throw ParameterError("Schwarzschild needs M > 0");
  CatalogEntry e;
  e.name = "schwarzschild";
  e.params["M"] = M;
  const double r_min = 2.0 * M * 1.01;
  const Domain dom = [r_min](const Vec& p, double m) {
    return p[0] > r_min + m && p[1] > 0.05 + m && p[1] < kPi - 0.05 - m;
  };
  e.S.n = 3;
  e.S.u = make_field("u", 3, [M](const auto& x) { return sqrt(1.0 - 2.0 * M / x[0]); }, dom);
  e.S.theta = zero_shift(3, dom);
  for (int i = 0; i < 9; ++i) e.S.g.push_back(make_constant_field("g", 3, 0.0, dom));
  e.S.g[0] = make_field("g_rr", 3, [M](const auto& x) { return 1.0 / (1.0 - 2.0 * M / x[0]); }, dom);
  e.S.g[4] = make_field("g_thth", 3, [](const auto& x) { return x[0] * x[0]; }, dom);
  e.S.g[8] = make_field("g_pp", 3,
                        [](const auto& x) {
                          auto s = sin(x[1]);
                          return x[0] * x[0] * s * s;
                        },
                        dom);
  e.S.lambda = 0.0;
  e.S.domain = dom;
  e.lambda = 0.0;
  e.is_static = e.vacuum = e.einstein = true;
  e.flat = false;
  e.anchors = {Vec{4.0 * M, kPi / 2.0, 0.0}, Vec{6.0 * M, kPi / 3.0, 1.0},
               Vec{3.0 * M, kPi / 2.0, 0.0}};
  e.box_lo = Vec{3.0 * M, 0.8, 0.0};
  e.box_hi = Vec{9.0 * M, kPi - 0.8, 2.0 * kPi};
  e.twist_anchor = Vec{10.0 * M, kPi / 2.0, 0.0};
  return e;
}

CatalogEntry make_kerr(double M, double a) {
  if (!(M > 0.0)) throw ParameterError("Kerr needs M > 0");
  if (a < 0.0 || a >= M) throw ParameterError("Kerr needs 0 <= a < M");
  CatalogEntry e;
  e.name = "kerr";
  e.params["M"] = M;
  e.params["a"] = a;
  // outside the ergosphere: Sigma - 2Mr > 0, i.e. r > M + sqrt(M^2 - a^2 cos^2)
  const Domain dom = [M, a](const Vec& p, double m) {
    const double c = std::cos(p[1]);
    const double ergo = M + std::sqrt(std::max(M * M - a * a * c * c, 0.0));
    return p[0] > ergo + 1e-3 + m && p[1] > 0.05 + m && p[1] < kPi - 0.05 - m;
  };
  e.S.n = 3;
  e.S.u = make_field("u", 3,
                     [M, a](const auto& x) {
                       auto c = cos(x[1]);
                       auto sigma = x[0] * x[0] + a * a * c * c;
                       return sqrt((sigma - 2.0 * M * x[0]) / sigma);
                     },
                     dom);
  e.S.theta.push_back(make_constant_field("theta_r", 3, 0.0, dom));
  e.S.theta.push_back(make_constant_field("theta_th", 3, 0.0, dom));
  e.S.theta.push_back(make_field("theta_phi", 3,
                                 [M, a](const auto& x) {
                                   auto s = sin(x[1]);
                                   auto c = cos(x[1]);
                                   auto sigma = x[0] * x[0] + a * a * c * c;
                                   return 2.0 * M * a * x[0] * s * s / (sigma - 2.0 * M * x[0]);
                                 },
                                 dom));
  for (int i = 0; i < 9; ++i) e.S.g.push_back(make_constant_field("g", 3, 0.0, dom));
  e.S.g[0] = make_field("g_rr", 3,
                        [M, a](const auto& x) {
                          auto c = cos(x[1]);
                          auto sigma = x[0] * x[0] + a * a * c * c;
                          auto delta = x[0] * x[0] - 2.0 * M * x[0] + a * a;
                          return sigma / delta;
                        },
                        dom);
  e.S.g[4] = make_field("g_thth", 3,
                        [a](const auto& x) {
                          auto c = cos(x[1]);
                          return x[0] * x[0] + a * a * c * c;
                        },
                        dom);
  e.S.g[8] = make_field("g_pp", 3,
                        [M, a](const auto& x) {
                          auto s = sin(x[1]);
                          auto c = cos(x[1]);
                          auto sigma = x[0] * x[0] + a * a * c * c;
                          auto delta = x[0] * x[0] - 2.0 * M * x[0] + a * a;
                          return delta * sigma * s * s / (sigma - 2.0 * M * x[0]);
                        },
                        dom);
  e.S.lambda = 0.0;
  e.S.domain = dom;
  e.lambda = 0.0;
  e.vacuum = e.einstein = true;
  e.is_static = (a == 0.0);
  e.flat = false;
  e.anchors = {Vec{5.0 * M, kPi / 3.0, 0.0}, Vec{6.0 * M, kPi / 2.0, 0.0},
               Vec{7.0 * M, 2.0, 1.0}};
  e.box_lo = Vec{4.0 * M, 0.8, 0.0};
  e.box_hi = Vec{9.0 * M, kPi - 0.8, 2.0 * kPi};
  e.twist_anchor = Vec{10.0 * M, kPi / 2.0, 0.0};
  return e;
}

CatalogEntry make_ads(double lambda) {
  if (!(lambda < 0.0)) throw ParameterError("anti-de Sitter needs lambda < 0");
  CatalogEntry e;
  e.name = "ads";
  e.params["lambda"] = lambda;
  const double kappa = -lambda / 3.0;
  const Domain dom = everywhere();
  e.S.n = 3;
  e.S.u = make_field("u", 3,
                     [kappa](const auto& x) {
                       auto r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
                       return sqrt(1.0 + kappa * r2);
                     },
                     dom);
  e.S.theta = zero_shift(3, dom);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      e.S.g.push_back(make_field("g_" + std::to_string(i) + std::to_string(j), 3,
                                 [kappa, i, j](const auto& x) {
                                   auto r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
                                   auto v = -kappa * x[i] * x[j] / (1.0 + kappa * r2);
                                   return (i == j) ? v + 1.0 : v;
                                 },
                                 dom));
  e.S.lambda = lambda;
  e.S.domain = dom;
  e.lambda = lambda;
  e.is_static = e.einstein = true;
  e.vacuum = false;
  e.flat = false;
  e.anchors = {Vec{0.5, 0.0, 0.0}, Vec{0.3, -0.4, 0.2}};
  e.box_lo = Vec{-1.0, -1.0, -1.0};
  e.box_hi = Vec{1.0, 1.0, 1.0};
  e.twist_anchor = Vec{0.0, 0.0, 0.0};
  return e;
}

CatalogEntry make_product_flat() {
  CatalogEntry e;
  e.name = "product-flat";
  const Domain dom = everywhere();
  Mat gN(3);
  gN(0, 0) = 1.5; gN(0, 1) = gN(1, 0) = 0.3;
  gN(1, 1) = 1.2; gN(1, 2) = gN(2, 1) = 0.1;
  gN(2, 2) = 0.9;
  e.S.n = 3;
  e.S.u = make_constant_field("u", 3, 1.0, dom);
  e.S.theta = zero_shift(3, dom);
  e.S.g = constant_metric(3, gN, dom);
  e.S.lambda = 0.0;
  e.S.domain = dom;
  e.lambda = 0.0;
  e.is_static = e.vacuum = e.einstein = e.flat = true;
  e.anchors = {Vec{0.0, 0.0, 0.0}, Vec{1.0, 1.0, -1.0}};
  e.box_lo = Vec{-2.0, -2.0, -2.0};
  e.box_hi = Vec{2.0, 2.0, 2.0};
  e.twist_anchor = Vec{0.0, 0.0, 0.0};
  return e;
}

CatalogEntry entry_by_name(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&params](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "minkowski-static") return make_minkowski_static();
  if (name == "minkowski-rotating") return make_minkowski_rotating(get("omega", 0.5));
  if (name == "schwarzschild") return make_schwarzschild(get("M", 1.0));
  if (name == "kerr") return make_kerr(get("M", 1.0), get("a", 0.5));
  if (name == "ads") return make_ads(get("lambda", -3.0));
  if (name == "product-flat") return make_product_flat();
  throw ParameterError("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
  return {"minkowski-static", "minkowski-rotating", "schwarzschild",
          "kerr", "ads", "product-flat"};
}

namespace {

ScalarField scale_field(const ScalarField& f, double c) {
  ScalarField s = f;
  auto value = f.value;
  auto grad = f.grad;
  auto hess = f.hess;
  s.value = [value, c](const Vec& p) { return c * value(p); };
  s.grad = [grad, c](const Vec& p) { return c * grad(p); };
  s.hess = [hess, c](const Vec& p) { return c * hess(p); };
  return s;
}

}  // namespace

CatalogEntry rescale_entry(const CatalogEntry& e, double k2) {
  if (!(k2 > 0.0)) throw ParameterError("rescale factor must be positive");
  CatalogEntry r = e;
  r.name = e.name + "-rescaled";
  const double k = std::sqrt(k2);
  r.S.u = scale_field(e.S.u, k);
  for (int i = 0; i < e.S.n * e.S.n; ++i) r.S.g[i] = scale_field(e.S.g[i], k2);
  if (e.lambda) {
    r.lambda = *e.lambda / k2;
    r.S.lambda = r.lambda;
  }
  return r;
}

std::vector<Vec> sample_points(const CatalogEntry& e, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec> pts;
  pts.reserve(count);
  int guard = 0;
  while (static_cast<int>(pts.size()) < count && guard < 100000) {
    ++guard;
    Vec p(e.S.n);
    for (int i = 0; i < e.S.n; ++i)
      p[i] = e.box_lo[i] + (e.box_hi[i] - e.box_lo[i]) * unit(rng);
    if (e.S.domain(p, 0.05)) pts.push_back(p);
  }
  if (static_cast<int>(pts.size()) < count)
    throw DomainError("sample box incompatible with chart domain");
  return pts;
}

}  // namespace statgeo
