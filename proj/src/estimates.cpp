#include "statgeo/estimates.hpp"

#include <cmath>
#include <random>

#include "statgeo/frame_geometry.hpp"
#include "statgeo/reduction4d.hpp"

namespace statgeo {

namespace {

const char* kSamplingNote =
    "radial-geodesic distances are upper bounds; sup taken over the sampled subset";

// ghat-unit initial tangents at the center, uniform via normal deviates.
std::vector<GeodesicState> unit_fan(const StationarySpacetime& S, const Vec& center,
                                    int ray_count, std::uint64_t seed) {
  const int n = S.n;
  const double u = S.u.value(center);
  Mat g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = S.g[i * n + j].value(center);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<GeodesicState> fan;
  fan.reserve(ray_count);
  for (int r = 0; r < ray_count; ++r) {
    GeodesicState st;
    st.t = 0.0;
    st.x = center;
    st.T0 = normal(rng);
    st.Ti = Vec(n);
    for (int i = 0; i < n; ++i) st.Ti[i] = normal(rng);
    // |T|_ghat^2 = u^2 (T^0)^2 + g_ij T^i T^j
    double norm2 = u * u * st.T0 * st.T0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += g(i, j) * st.Ti[i] * st.Ti[j];
    const double inv = 1.0 / std::sqrt(norm2);
    st.T0 *= inv;
    st.Ti *= inv;
    fan.push_back(st);
  }
  return fan;
}

}  // namespace

BallSample sample_ball(const StationarySpacetime& S, const Vec& center, double a,
                       const BallOptions& opts) {
  BallSample ball;
  ball.center = center;
  ball.radius = a;
  if (a == 0.0) {
    ball.points.push_back({center, 0.0});
    return ball;
  }

  const std::vector<GeodesicState> fan = unit_fan(S, center, opts.ray_count, opts.seed);
  std::vector<std::vector<BallPoint>> per_ray(fan.size());
  std::vector<int> failed(fan.size(), 0);

  sweep_for(static_cast<int>(fan.size()), opts.mode, [&](int r) {
    const GeodesicTrajectory traj =
        integrate_geodesic(S, MetricKind::hat, fan[r], a, opts.tol);
    if (traj.exit != ExitReason::reached_smax) {
      failed[r] = 1;
      return;
    }
    // unit-speed rays: arclength = parameter; pick per_ray equal fractions
    // with cubic Hermite interpolation (positions and velocities at samples)
    auto& pts = per_ray[r];
    std::size_t cursor = 0;
    for (int k = 1; k <= opts.per_ray; ++k) {
      const double target = a * k / opts.per_ray;
      while (cursor + 1 < traj.samples.size() && traj.samples[cursor + 1].s < target) ++cursor;
      const auto& lo = traj.samples[cursor];
      const auto& hi = traj.samples[std::min(cursor + 1, traj.samples.size() - 1)];
      const double span = std::max(hi.s - lo.s, 1e-300);
      const double t = std::clamp((target - lo.s) / span, 0.0, 1.0);
      const double t2 = t * t, t3 = t2 * t;
      const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0, h10 = t3 - 2.0 * t2 + t;
      const double h01 = -2.0 * t3 + 3.0 * t2, h11 = t3 - t2;
      Vec x(lo.state.x.size());
      for (int i = 0; i < x.size(); ++i)
        x[i] = h00 * lo.state.x[i] + h10 * span * lo.state.Ti[i] + h01 * hi.state.x[i] +
               h11 * span * hi.state.Ti[i];
      pts.push_back({x, target});
    }
  });

  for (std::size_t r = 0; r < fan.size(); ++r) {
    if (failed[r])
      throw DomainError("ball ray left the chart before reaching radius a");
    for (const auto& pt : per_ray[r]) ball.points.push_back(pt);
  }
  ball.points.push_back({center, 0.0});
  return ball;
}

EstimateReport gradient_estimate_ratio(const StationarySpacetime& S, const std::string& entry,
                                       const Vec& center, double a, const BallOptions& opts) {
  {
    const PointData pd = eval_point(S, center);
    if (max_abs(pd.lambda2) >= 1e-10)
      throw NotStaticError("gradient estimate requires a static entry");
  }
  const BallSample ball = sample_ball(S, center, a, opts);
  const double lambda = S.lambda.value_or(0.0);

  EstimateReport rep;
  rep.entry = entry;
  rep.monitor = "gradient";
  rep.center = center;
  rep.a = a;
  rep.lambda = lambda;
  rep.note = kSamplingNote;
  for (const auto& pt : ball.points) {
    if (pt.dist > 0.5 * a) continue;
    ++rep.sample_count;
    const PointData pd = eval_point(S, pt.x);
    Vec dlogu(pd.n);
    for (int i = 0; i < pd.n; ++i) dlogu[i] = pd.du[i] / pd.u;
    const double v = 2.0 * std::sqrt(inner(pd.ginv, dlogu, dlogu));
    rep.samples.emplace_back(pt.dist, v);
    rep.sup_value = std::max(rep.sup_value, v);
  }
  rep.bound_form = std::sqrt(static_cast<double>(S.n)) / a + std::sqrt(std::max(-lambda, 0.0));
  rep.implied_constant = rep.sup_value / rep.bound_form;
  return rep;
}

double riemann_norm_hat(const StationarySpacetime& S, const Vec& p) {
  const PointData pd = eval_point(S, p);
  const CurvatureBlocks blocks = curvature_blocks(pd);
  const Ten4 full = blocks.assemble_full();
  // frame inverse of ghat: diag(u^-2, g^ij)
  Mat inv(pd.n + 1);
  inv(0, 0) = 1.0 / (pd.u * pd.u);
  for (int i = 0; i < pd.n; ++i)
    for (int j = 0; j < pd.n; ++j) inv(i + 1, j + 1) = pd.ginv(i, j);
  return std::sqrt(std::max(riemann_norm2(full, inv), 0.0));
}

CurvatureReports curvature_estimate_ratio(const StationarySpacetime& S, const std::string& entry,
                                          const Vec& center, double a, const BallOptions& opts) {
  if (S.n != 3) throw DimensionError("curvature monitor requires dim M = 4");
  const BallSample ball = sample_ball(S, center, a, opts);
  const double lambda = S.lambda.value_or(0.0);

  CurvatureReports out;
  out.riemann.entry = out.h.entry = entry;
  out.riemann.monitor = "curvature";
  out.h.monitor = "h";
  out.riemann.center = out.h.center = center;
  out.riemann.a = out.h.a = a;
  out.riemann.lambda = out.h.lambda = lambda;
  out.riemann.note = out.h.note = kSamplingNote;

  for (const auto& pt : ball.points) {
    if (pt.dist > 0.5 * a) continue;
    ++out.riemann.sample_count;
    ++out.h.sample_count;
    const double rm = riemann_norm_hat(S, pt.x);
    const double hv = h_monitor(S, pt.x).h;
    out.riemann.samples.emplace_back(pt.dist, rm);
    out.h.samples.emplace_back(pt.dist, hv);
    out.riemann.sup_value = std::max(out.riemann.sup_value, rm);
    out.h.sup_value = std::max(out.h.sup_value, hv);
  }
  out.riemann.bound_form = 1.0 / (a * a) + std::max(-lambda, 0.0);
  out.h.bound_form = 1.0 / (a * a);
  out.riemann.implied_constant = out.riemann.sup_value / out.riemann.bound_form;
  out.h.implied_constant = out.h.sup_value / out.h.bound_form;
  return out;
}

double static_bochner_residual(const StationarySpacetime& S, const Vec& p) {
  const PointData pd = eval_point(S, p);
  if (max_abs(pd.lambda2) >= 1e-10)
    throw NotStaticError("static Bochner identity requires a static entry");
  const double lambda = S.lambda.value_or(0.0);
  const int n = pd.n;

  auto grad2 = [&S](const Vec& q) {
    const PointData d = eval_point(S, q);
    Vec dlu(d.n);
    for (int i = 0; i < d.n; ++i) dlu[i] = d.du[i] / d.u;
    return inner(d.ginv, dlu, dlu);
  };
  const ScalarField F = make_numeric_field("grad_logu_sq", grad2, FDPolicy{}, S.domain);
  const Vec dF = F.grad(p);
  const Mat ddF = F.hess(p);

  Vec dlogu(n);
  for (int i = 0; i < n; ++i) dlogu[i] = pd.du[i] / pd.u;
  const double lhs = horizontal_laplacian(pd, dF, ddF) + inner(pd.ginv, dlogu, dF);

  Mat dd_logu(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dd_logu(i, j) = pd.ddu(i, j) / pd.u - pd.du[i] * pd.du[j] / (pd.u * pd.u);
  const Mat hess_logu = pd.covariant_hessian(dlogu, dd_logu);
  double hess2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          hess2 += hess_logu(i, j) * hess_logu(k, l) * pd.ginv(i, k) * pd.ginv(j, l);
  const double A = inner(pd.ginv, dlogu, dlogu);
  const double rhs = 2.0 * hess2 + 2.0 * A * A + 2.0 * lambda * A;
  return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace statgeo
