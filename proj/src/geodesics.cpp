#include "statgeo/geodesics.hpp"

#include <cmath>
#include <fstream>

namespace statgeo {

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0}};
constexpr double kB5[7] = {35.0 / 384.0,      0.0,  500.0 / 1113.0, 125.0 / 192.0,
                           -2187.0 / 6784.0, 11.0 / 84.0, 0.0};
constexpr double kB4[7] = {5179.0 / 57600.0, 0.0,           7571.0 / 16695.0, 393.0 / 640.0,
                           -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0};

constexpr int kMaxSteps = 1000000;

struct OdeState {
  int dim = 0;
  std::array<double, 2 * kMaxDim + 4> y{};
};

// Generic embedded RK5(4) driver with PI step control. The RHS may throw
// DomainError/SingularMetricError for stage points that stray outside the
// chart; such steps are rejected and retried smaller.
template <class Rhs, class Inside, class Record>
ExitReason drive(const OdeState& init, double s_max, double tol, Rhs&& rhs, Inside&& inside,
                 Record&& record, double* s_exit_out) {
  const int d = init.dim;
  OdeState y = init;
  double s = 0.0;
  double h = 1e-4 * std::max(1.0, s_max);
  double err_prev = 1.0;

  OdeState k[7];
  for (auto& ki : k) ki.dim = d;

  record(s, y);

  auto try_rhs = [&](double sv, const OdeState& yv, OdeState& out) -> bool {
    try {
      rhs(sv, yv, out);
    } catch (const DomainError&) {
      return false;
    } catch (const SingularMetricError&) {
      return false;
    }
    for (int i = 0; i < d; ++i)
      if (!std::isfinite(out.y[i])) return false;
    return true;
  };

  for (int step = 0; step < kMaxSteps; ++step) {
    if (s_max - s <= 1e-12 * std::max(1.0, s_max)) {
      *s_exit_out = s;
      return ExitReason::reached_smax;
    }
    h = std::min(h, s_max - s);
    if (h < 1e-14 * std::max(1.0, std::abs(s))) {
      *s_exit_out = s;
      return ExitReason::step_underflow;
    }

    bool stage_ok = try_rhs(s, y, k[0]);
    OdeState ynew;
    ynew.dim = d;
    double err = 0.0;
    if (stage_ok) {
      for (int stage = 1; stage < 7 && stage_ok; ++stage) {
        OdeState ys;
        ys.dim = d;
        for (int i = 0; i < d; ++i) {
          double acc = y.y[i];
          for (int j = 0; j < stage; ++j) acc += h * kA[stage][j] * k[j].y[i];
          ys.y[i] = acc;
        }
        stage_ok = try_rhs(s + h, ys, k[stage]);
      }
    }
    if (stage_ok) {
      double err2 = 0.0;
      for (int i = 0; i < d; ++i) {
        double y5 = y.y[i], y4 = y.y[i];
        for (int j = 0; j < 7; ++j) {
          y5 += h * kB5[j] * k[j].y[i];
          y4 += h * kB4[j] * k[j].y[i];
        }
        ynew.y[i] = y5;
        const double scale = tol * (1.0 + std::max(std::abs(y.y[i]), std::abs(y5)));
        const double e = (y5 - y4) / scale;
        err2 += e * e;
      }
      err = std::sqrt(err2 / d);
      if (!std::isfinite(err)) stage_ok = false;
    }

    if (!stage_ok) {
      h *= 0.25;
      continue;
    }

    if (err <= 1.0) {
      // accepted; check the chart before committing
      if (!inside(ynew)) {
        // bisect the exit parameter to 1e-8 by shrinking single steps
        double lo = 0.0, hi = h;
        OdeState ybest = y;
        while (hi - lo > 1e-8) {
          const double mid = 0.5 * (lo + hi);
          OdeState ytrial;
          ytrial.dim = d;
          bool ok = true;
          OdeState km[7];
          for (auto& kk : km) kk.dim = d;
          ok = try_rhs(s, y, km[0]);
          for (int stage = 1; stage < 7 && ok; ++stage) {
            OdeState ys;
            ys.dim = d;
            for (int i = 0; i < d; ++i) {
              double acc = y.y[i];
              for (int j = 0; j < stage; ++j) acc += mid * kA[stage][j] * km[j].y[i];
              ys.y[i] = acc;
            }
            ok = try_rhs(s + mid, ys, km[stage]);
          }
          if (ok) {
            for (int i = 0; i < d; ++i) {
              double acc = y.y[i];
              for (int j = 0; j < 7; ++j) acc += mid * kB5[j] * km[j].y[i];
              ytrial.y[i] = acc;
            }
            ok = inside(ytrial);
          }
          if (ok) {
            lo = mid;
            ybest = ytrial;
          } else {
            hi = mid;
          }
        }
        if (lo > 0.0) record(s + lo, ybest);
        *s_exit_out = s + lo;
        return ExitReason::left_domain;
      }
      s += h;
      y = ynew;
      record(s, y);
      // PI controller
      const double fac = 0.9 * std::pow(err, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      h *= std::clamp(fac, 0.2, 10.0);
      err_prev = std::max(err, 1e-10);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
    }
  }
  *s_exit_out = s;
  return ExitReason::step_underflow;
}

StationarySpacetime branch_for(const StationarySpacetime& S, MetricKind kind) {
  const bool want_riemannian = (kind == MetricKind::hat);
  const bool is_riemannian = (S.branch == Branch::riemannian);
  return want_riemannian == is_riemannian ? S : hat_metric(S);
}

// Components evaluated without the chart predicate: RK stages may probe
// slightly past the boundary while the step logic bisects the exit. Genuine
// breakdowns surface as NaN and reject the step.
CoordinateMetric padded_spacetime_metric(const StationarySpacetime& S) {
  CoordinateMetric cm;
  cm.dim = S.n + 1;
  cm.negative_eigenvalues = (S.branch == Branch::lorentzian) ? 1 : 0;
  cm.components = [S](const Vec& pf) {
    const int n = S.n;
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = pf[i + 1];
    const double u = S.u.value(x);
    const double w = S.w_sign() * u * u;
    Mat gbar(n + 1);
    gbar(0, 0) = w;
    Vec theta(n);
    for (int i = 0; i < n; ++i) theta[i] = S.theta[i].value(x);
    for (int i = 0; i < n; ++i) gbar(0, i + 1) = gbar(i + 1, 0) = w * theta[i];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gbar(i + 1, j + 1) = S.g[i * n + j].value(x) + w * theta[i] * theta[j];
    return gbar;
  };
  cm.domain = everywhere();
  return cm;
}

CoordinateMetric padded_horizontal_metric(const StationarySpacetime& S) {
  CoordinateMetric cm = horizontal_coordinate_metric(S);
  cm.domain = everywhere();
  return cm;
}

}  // namespace

double GeodesicTrajectory::max_c_drift() const {
  double m = 0.0;
  for (const auto& smp : samples) m = std::max(m, smp.c_drift);
  return m;
}

double GeodesicTrajectory::max_norm_drift() const {
  double m = 0.0;
  for (const auto& smp : samples) m = std::max(m, smp.norm_drift);
  return m;
}

GeodesicTrajectory integrate_geodesic(const StationarySpacetime& S, MetricKind kind,
                                      const GeodesicState& init, double s_max, double tol) {
  const StationarySpacetime M = branch_for(S, kind);
  const int n = M.n;
  const int dim = n + 1;
  const CoordinateMetric cm = padded_spacetime_metric(M);

  // state layout: x^0..x^n, v^0..v^n, y (projected time coordinate)
  OdeState y0;
  y0.dim = 2 * dim + 1;
  y0.y[0] = init.t;
  for (int i = 0; i < n; ++i) y0.y[1 + i] = init.x[i];
  double v0 = init.T0;
  for (int i = 0; i < n; ++i) v0 -= init.Ti[i] * M.theta[i].value(init.x);
  y0.y[dim] = v0;
  for (int i = 0; i < n; ++i) y0.y[dim + 1 + i] = init.Ti[i];
  y0.y[2 * dim] = init.t;

  auto rhs = [&cm, dim, n, &M](double, const OdeState& st, OdeState& out) {
    Vec p(dim);
    for (int a = 0; a < dim; ++a) p[a] = st.y[a];
    const Ten3 gamma = coordinate_christoffels(cm, p);
    for (int a = 0; a < dim; ++a) out.y[a] = st.y[dim + a];
    for (int a = 0; a < dim; ++a) {
      double acc = 0.0;
      for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) acc -= gamma(a, b, c) * st.y[dim + b] * st.y[dim + c];
      out.y[dim + a] = acc;
    }
    // dy/ds = -sum_i T^i theta_i
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = st.y[1 + i];
    double ydot = 0.0;
    for (int i = 0; i < n; ++i) ydot -= st.y[dim + 1 + i] * M.theta[i].value(x);
    out.y[2 * dim] = ydot;
  };

  auto inside = [&M, n](const OdeState& st) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = st.y[1 + i];
    return M.domain(x, 0.0);
  };

  GeodesicTrajectory traj;
  traj.kind = kind;
  bool first = true;

  auto record = [&](double s, const OdeState& st) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = st.y[1 + i];
    TrajectorySample smp;
    smp.s = s;
    smp.state.t = st.y[0];
    smp.state.x = x;
    smp.state.Ti = Vec(n);
    double T0 = st.y[dim];
    for (int i = 0; i < n; ++i) {
      smp.state.Ti[i] = st.y[dim + 1 + i];
      T0 += st.y[dim + 1 + i] * M.theta[i].value(x);
    }
    smp.state.T0 = T0;
    const double u = M.u.value(x);
    const double w = M.w_sign() * u * u;

    const Mat gbar = metric_components(M, x);
    double norm = 0.0;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) norm += gbar(a, b) * st.y[dim + a] * st.y[dim + b];

    if (first) {
      traj.c = T0 * w;
      traj.norm0 = norm;
      first = false;
    }
    smp.c_drift = std::abs(T0 * w - traj.c) / std::max(std::abs(traj.c), 1.0);
    smp.norm_drift = std::abs(norm - traj.norm0) / std::max(std::abs(traj.norm0), 1.0);
    traj.samples.push_back(smp);
    traj.proj_y.push_back(st.y[2 * dim]);
  };

  traj.exit = drive(y0, s_max, tol, rhs, inside, record, &traj.s_exit);
  return traj;
}

ProjectedCurve horizontal_projection(const StationarySpacetime& S,
                                     const GeodesicTrajectory& traj) {
  const StationarySpacetime M =
      branch_for(S, traj.kind);
  const int n = M.n;
  ProjectedCurve out;
  out.samples.reserve(traj.samples.size());
  for (std::size_t k = 0; k < traj.samples.size(); ++k) {
    const TrajectorySample& smp = traj.samples[k];
    ProjectedSample ps;
    ps.s = smp.s;
    ps.y = traj.proj_y[k];
    ps.tau = ps.y - smp.state.t;
    ps.x = smp.state.x;
    ps.xdot = smp.state.Ti;

    const double u = M.u.value(ps.x);
    const double w = M.w_sign() * u * u;
    // sigma_dot in coordinates: (dy/ds, T^i); <sigma_dot, X> = w (dy/ds + T^i theta_i) = 0
    double ydot = 0.0;
    for (int i = 0; i < n; ++i) ydot -= ps.xdot[i] * M.theta[i].value(ps.x);
    double theta_dot = 0.0;
    for (int i = 0; i < n; ++i) theta_dot += ps.xdot[i] * M.theta[i].value(ps.x);
    ps.killing_component = w * (ydot + theta_dot);

    Mat g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = M.g[i * n + j].value(ps.x);
    double spatial2 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) spatial2 += g(i, j) * ps.xdot[i] * ps.xdot[j];
    ps.speed_hat = std::sqrt(std::max(spatial2, 0.0));
    ps.speed_hat_input = std::sqrt(std::max(spatial2 + u * u * smp.state.T0 * smp.state.T0, 0.0));
    out.samples.push_back(ps);
  }
  return out;
}

CurveOnN projected_geodesic_integrate(const StationarySpacetime& S, const Vec& x0,
                                      const Vec& xdot0, double c, double s_max, double tol) {
  const int n = S.n;
  const CoordinateMetric cm = padded_horizontal_metric(S);
  const double w_sign = S.w_sign();

  OdeState y0;
  y0.dim = 2 * n;
  for (int i = 0; i < n; ++i) {
    y0.y[i] = x0[i];
    y0.y[n + i] = xdot0[i];
  }

  auto rhs = [&cm, n, &S, c, w_sign](double, const OdeState& st, OdeState& out) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = st.y[i];
    const Ten3 gamma = coordinate_christoffels(cm, x);
    Mat g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = S.g[i * n + j].value(x);
    const Mat ginv = inverse(g);

    // grad of w^-1 = w_sign u^-2: d_j = -2 w_sign u^-3 u_j
    const double u = S.u.value(x);
    const Vec du = S.u.grad(x);
    Vec dwinv(n);
    for (int j = 0; j < n; ++j) dwinv[j] = -2.0 * w_sign * du[j] / (u * u * u);

    // Lambda_lm = d_l theta_m - d_m theta_l
    Mat dtheta(n);
    for (int m = 0; m < n; ++m) {
      const Vec dth = S.theta[m].grad(x);
      for (int l = 0; l < n; ++l) dtheta(l, m) = dth[l];
    }

    for (int i = 0; i < n; ++i) out.y[i] = st.y[n + i];
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc -= gamma(i, k, l) * st.y[n + k] * st.y[n + l];
      for (int j = 0; j < n; ++j) acc -= 0.5 * c * c * ginv(i, j) * dwinv[j];
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
          acc -= c * ginv(m, i) * (dtheta(l, m) - dtheta(m, l)) * st.y[n + l];
      out.y[n + i] = acc;
    }
  };

  auto inside = [&S, n](const OdeState& st) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = st.y[i];
    return S.domain(x, 0.0);
  };

  CurveOnN curve;
  auto record = [&curve, n](double s, const OdeState& st) {
    CurveSample smp;
    smp.s = s;
    smp.x = Vec(n);
    smp.xdot = Vec(n);
    for (int i = 0; i < n; ++i) {
      smp.x[i] = st.y[i];
      smp.xdot[i] = st.y[n + i];
    }
    curve.samples.push_back(smp);
  };

  curve.exit = drive(y0, s_max, tol, rhs, inside, record, &curve.s_exit);
  return curve;
}

ProbeReport completeness_probe(const StationarySpacetime& S, MetricKind kind,
                               const std::vector<GeodesicState>& fan, double s_max, double tol,
                               ExecMode mode) {
  if (fan.empty()) throw ParameterError("completeness probe needs a nonempty fan");
  for (const auto& ray : fan)
    if (!S.domain(ray.x, 0.0)) throw DomainError("fan initial point outside the chart");
  ProbeReport report;
  report.rays.resize(fan.size());
  sweep_for(static_cast<int>(fan.size()), mode, [&](int i) {
    const GeodesicTrajectory traj = integrate_geodesic(S, kind, fan[i], s_max, tol);
    RayOutcome& ray = report.rays[i];
    ray.exit = traj.exit;
    ray.s_exit = traj.s_exit;
    ray.max_c_drift = traj.max_c_drift();
  });
  for (const auto& ray : report.rays) {
    if (ray.exit == ExitReason::reached_smax) ++report.reached;
    else if (ray.exit == ExitReason::left_domain) ++report.left_domain;
    else ++report.underflow;
  }
  return report;
}

void write_trajectory_csv(const GeodesicTrajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path);
  const int n = traj.samples.empty() ? 0 : traj.samples.front().state.x.size();
  out << "s,t";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  for (int i = 0; i <= n; ++i) out << ",T" << i;
  out << ",c_drift,gTT_drift\n";
  out.precision(17);
  for (const auto& smp : traj.samples) {
    out << smp.s << ',' << smp.state.t;
    for (int i = 0; i < n; ++i) out << ',' << smp.state.x[i];
    out << ',' << smp.state.T0;
    for (int i = 0; i < n; ++i) out << ',' << smp.state.Ti[i];
    out << ',' << smp.c_drift << ',' << smp.norm_drift << '\n';
  }
}

}  // namespace statgeo
