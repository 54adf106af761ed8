// catalog: canonical-form reconstruction, limits, parameter validation

#include <doctest.h>

#include <cmath>

#include "statgeo/catalog.hpp"

using namespace statgeo;

namespace {
constexpr double kPi = 3.14159265358979323846;

// textbook Boyer-Lindquist components, coded independently of the canonical
// split
Mat kerr_bl(double M, double a, double r, double th) {
  const double s = std::sin(th), c = std::cos(th);
  const double sigma = r * r + a * a * c * c;
  const double delta = r * r - 2.0 * M * r + a * a;
  Mat g(4);
  g(0, 0) = -(1.0 - 2.0 * M * r / sigma);
  g(0, 3) = g(3, 0) = -2.0 * M * a * r * s * s / sigma;
  g(1, 1) = sigma / delta;
  g(2, 2) = sigma;
  g(3, 3) = (r * r + a * a + 2.0 * M * a * a * r * s * s / sigma) * s * s;
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("catalog");

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_schwarzschild(0.0), ParameterError);
  CHECK_THROWS_AS(make_schwarzschild(-1.0), ParameterError);
  CHECK_THROWS_AS(make_kerr(1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(make_kerr(1.0, 2.0), ParameterError);
  CHECK_THROWS_AS(make_kerr(1.0, -0.1), ParameterError);
  CHECK_THROWS_AS(make_minkowski_rotating(0.0), ParameterError);
  CHECK_THROWS_AS(make_ads(0.0), ParameterError);
  CHECK_THROWS_AS(make_ads(3.0), ParameterError);
  CHECK_THROWS_AS(entry_by_name("nosuch", {}), ParameterError);
  CHECK_NOTHROW(make_kerr(1.0, 0.0));
}

TEST_CASE("canonical assembly matches the textbook coordinate forms") {
  // Kerr vs Boyer-Lindquist at the anchors
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  for (const auto& p : kerr.anchors) {
    const Mat assembled = metric_components(kerr.S, p);
    const Mat book = kerr_bl(1.0, 0.5, p[0], p[1]);
    CHECK(max_abs(assembled - book) < 1e-12);
  }

  // rotating Minkowski: gbar = -(1-W^2 rho^2) dt^2 - 2 W rho^2 dt dphi
  //                          + drho^2 + rho^2 dphi^2 + dz^2
  const CatalogEntry rot = make_minkowski_rotating(0.5);
  const Vec q{0.5, 0.3, 0.1};
  const Mat m = metric_components(rot.S, q);
  const double rho2 = 0.25;
  CHECK(m(0, 0) == doctest::Approx(-(1.0 - 0.25 * rho2)).epsilon(1e-14));
  CHECK(m(0, 2) == doctest::Approx(-0.5 * rho2).epsilon(1e-14));
  CHECK(m(2, 2) == doctest::Approx(rho2).epsilon(1e-14));
  CHECK(m(1, 1) == doctest::Approx(1.0));
  CHECK(m(3, 3) == doctest::Approx(1.0));

  // canonical split values quoted for the rotating chart
  const double u2 = rot.S.u.value(q) * rot.S.u.value(q);
  CHECK(u2 == doctest::Approx(1.0 - 0.25 * rho2).epsilon(1e-14));
  CHECK(rot.S.theta[1].value(q) ==
        doctest::Approx(0.5 * rho2 / (1.0 - 0.25 * rho2)).epsilon(1e-14));
  CHECK(rot.S.g[4].value(q) == doctest::Approx(rho2 / (1.0 - 0.25 * rho2)).epsilon(1e-14));

  // Schwarzschild diagonal form
  const CatalogEntry schw = make_schwarzschild(1.0);
  const Vec sp{4.0, kPi / 3.0, 0.5};
  const Mat sm = metric_components(schw.S, sp);
  CHECK(sm(0, 0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(sm(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sm(2, 2) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(sm(3, 3) == doctest::Approx(16.0 * std::pow(std::sin(kPi / 3.0), 2)).epsilon(1e-14));
  CHECK(max_abs(sm - kerr_bl(1.0, 0.0, sp[0], sp[1])) < 1e-12);
}

TEST_CASE("Kerr reduces to Schwarzschild at a = 0") {
  const CatalogEntry k0 = make_kerr(1.0, 0.0);
  const CatalogEntry schw = make_schwarzschild(1.0);
  for (const auto& p : sample_points(schw, 50, 17)) {
    CHECK(std::abs(k0.S.u.value(p) - schw.S.u.value(p)) < 1e-12);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(k0.S.theta[i].value(p) - schw.S.theta[i].value(p)) < 1e-12);
    for (int i = 0; i < 9; ++i)
      CHECK(std::abs(k0.S.g[i].value(p) - schw.S.g[i].value(p)) < 1e-12);
  }
}

TEST_CASE("AdS chart covers the origin and reproduces the static form") {
  const CatalogEntry ads = make_ads(-3.0);
  CHECK(ads.S.domain(Vec{0.0, 0.0, 0.0}, 1.0));
  const Vec p{0.5, 0.0, 0.0};
  // radial direction: g_rr = 1/(1+r^2); tangential: g = r^2 on the sphere
  const double u2 = ads.S.u.value(p) * ads.S.u.value(p);
  CHECK(u2 == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(ads.S.g[0].value(p) == doctest::Approx(1.0 / 1.25).epsilon(1e-14));
  CHECK(ads.S.g[4].value(p) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ads.S.g[8].value(p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sampling is deterministic in the seed and respects the chart") {
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  const auto a = sample_points(kerr, 40, 99);
  const auto b = sample_points(kerr, 40, 99);
  const auto c = sample_points(kerr, 40, 100);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < 3; ++j) CHECK(a[i][j] == b[i][j]);
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < 3; ++j) same = same && a[i][j] == c[i][j];
  CHECK_FALSE(same);
  for (const auto& p : a) CHECK(kerr.S.domain(p, 0.0));
}

TEST_CASE("rescaled entry: components scale by k^2, lambda by 1/k^2") {
  const CatalogEntry schw = make_schwarzschild(1.0);
  const CatalogEntry big = rescale_entry(schw, 4.0);
  const Vec p{4.0, kPi / 2.0, 0.0};
  CHECK(max_abs(metric_components(big.S, p) - 4.0 * metric_components(schw.S, p)) < 1e-12);
  CHECK(*big.lambda == doctest::Approx(0.0));

  const CatalogEntry ads = make_ads(-3.0);
  const CatalogEntry ads2 = rescale_entry(ads, 2.0);
  CHECK(*ads2.lambda == doctest::Approx(-1.5));
}

TEST_CASE("entries remain usable across their parameter ranges") {
  for (double M : {0.5, 1.0, 2.0}) {
    const CatalogEntry schw = make_schwarzschild(M);
    for (const auto& p : schw.anchors) CHECK(schw.S.domain(p, 0.01));
    CHECK(sample_points(schw, 10, 3).size() == 10);
    const CatalogEntry kerr = make_kerr(M, 0.4 * M);
    for (const auto& p : kerr.anchors) CHECK(kerr.S.domain(p, 0.01));
  }
  for (double omega : {0.25, 0.5, 2.0}) {
    const CatalogEntry rot = make_minkowski_rotating(omega);
    for (const auto& p : rot.anchors) CHECK(rot.S.domain(p, 0.01));
    CHECK(sample_points(rot, 10, 3).size() == 10);
  }
}

TEST_SUITE_END();
