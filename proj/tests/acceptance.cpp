// Acceptance suite: end-to-end criteria over the whole catalog.
// Prints one PASS/FAIL line per criterion; exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "statgeo/catalog.hpp"
#include "statgeo/checks.hpp"
#include "statgeo/estimates.hpp"
#include "statgeo/frame_geometry.hpp"
#include "statgeo/geodesics.hpp"
#include "statgeo/oracle.hpp"
#include "statgeo/reduction4d.hpp"

using namespace statgeo;

namespace {

constexpr double kPi = 3.14159265358979323846;
int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

Mat ricci_frame_matrix(const RicciBlocks& r, int n) {
  Mat m(n + 1);
  m(0, 0) = r.ric00;
  for (int j = 0; j < n; ++j) m(0, j + 1) = m(j + 1, 0) = r.ric0j[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i + 1, j + 1) = r.ricij(i, j);
  return m;
}

GeodesicState state(double t, Vec x, double T0, Vec Ti) {
  GeodesicState s;
  s.t = t;
  s.x = std::move(x);
  s.T0 = T0;
  s.Ti = std::move(Ti);
  return s;
}

// --- criterion 1: oracle equivalence --------------------------------------
void oracle_equivalence() {
  const std::vector<CatalogEntry> entries = {make_minkowski_rotating(0.5),
                                             make_schwarzschild(1.0), make_kerr(1.0, 0.5),
                                             make_ads(-3.0)};
  double worst = 0.0;
  std::string where;
  for (const auto& e : entries) {
    const auto pts = sample_points(e, 50, 2);
    const CoordinateMetric cm = spacetime_coordinate_metric(e.S);
    const double r = sweep_max(static_cast<int>(pts.size()), ExecMode::parallel, [&](int i) {
      const Vec& p = pts[i];
      Vec pf(4);
      for (int k = 0; k < 3; ++k) pf[k + 1] = p[k];
      const FrameMap f = adapted_frame(e.S, p);
      const double rm = rel_diff(curvature_blocks(e.S, p).assemble_full(),
                                 frame_transform4(coordinate_riemann(cm, pf), f));
      const double rc = rel_diff(ricci_frame_matrix(ricci_blocks(e.S, p), 3),
                                 frame_transform2(coordinate_ricci(cm, pf), f));
      return std::max(rm, rc);
    });
    if (r > worst) {
      worst = r;
      where = e.name;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max rel diff %.3e (worst: %s; tol 1e-5, 50 pts/entry)",
                worst, where.c_str());
  report("oracle_equivalence", worst < 1e-5, buf);
}

// --- criterion 2: vacuum suite ---------------------------------------------
void vacuum_suite() {
  double worst = 0.0;
  for (const auto& e : {make_schwarzschild(1.0), make_kerr(1.0, 0.5)}) {
    for (const auto& p : e.anchors) {
      const RicciBlocks r = ricci_blocks(e.S, p);
      worst = std::max({worst, std::abs(r.ric00), max_abs(r.ric0j), max_abs(r.ricij)});
    }
  }
  const CatalogEntry ads = make_ads(-3.0);
  double ads_worst = 0.0;
  for (const auto& p : ads.anchors) {
    const PointData pd = eval_point(ads.S, p);
    const RicciBlocks r = ricci_blocks(ads.S, p);
    ads_worst = std::max(ads_worst, std::abs(r.ric00 - (-3.0) * pd.w()));
    ads_worst = std::max(ads_worst, max_abs(r.ric0j));
    Mat diff = r.ricij;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) diff(i, j) -= -3.0 * pd.g(i, j);
    ads_worst = std::max(ads_worst, max_abs(diff));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "vacuum %.3e, AdS Einstein %.3e (tol 1e-6)", worst, ads_worst);
  report("vacuum_suite", worst < 1e-6 && ads_worst < 1e-6, buf);
}

// --- criterion 3: flatness rigidity fixtures --------------------------------
void flatness_fixtures() {
  const CatalogEntry rot = make_minkowski_rotating(0.5);
  double blocks = 0.0, lam_min = 1e300;
  for (const auto& p : sample_points(rot, 50, 3)) {
    const PointData pd = eval_point(rot.S, p);
    lam_min = std::min(lam_min, max_abs(pd.lambda2));
    const CurvatureBlocks b = curvature_blocks(pd);
    blocks = std::max({blocks, max_abs(b.rm_ijkl), max_abs(b.rm_ijk0), max_abs(b.rm_i0j0)});
  }

  const CatalogEntry prod = make_product_flat();
  BallOptions opts;
  opts.ray_count = 16;
  opts.per_ray = 4;
  const EstimateReport grad =
      gradient_estimate_ratio(prod.S, prod.name, Vec{0.0, 0.0, 0.0}, 1.0, opts);

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "rotating chart: |Lambda|>=%.2e, blocks %.3e (tol 1e-8); product sup %.1f",
                lam_min, blocks, grad.sup_value);
  report("flatness_fixtures", lam_min > 0.0 && blocks < 1e-8 && grad.sup_value == 0.0, buf);
}

// --- criterion 4: twist identities -----------------------------------------
void twist_identities_criterion() {
  double norm = 0.0, div = 0.0;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = entry_by_name(name, {});
    for (const auto& p : sample_points(e, 30, 4)) {
      const TwistResiduals res = twist_identities(e.S, p);
      norm = std::max(norm, res.norm);
      div = std::max(div, res.divergence);
    }
  }

  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  double domega = 0.0;
  for (const auto& p : sample_points(kerr, 20, 5)) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto comp_j = [&kerr, j](const Vec& q) { return twist_one_form(kerr.S, q)[j]; };
        auto comp_i = [&kerr, i](const Vec& q) { return twist_one_form(kerr.S, q)[i]; };
        const double h = 1e-3 * std::max(1.0, std::abs(p[i]));
        domega = std::max(domega, std::abs(richardson_d1(comp_j, p, i, h, 2) -
                                           richardson_d1(comp_i, p, j, h, 2)));
      }
  }

  const Vec base = kerr.twist_anchor;
  const Vec target{5.0, kPi / 3.0, 0.0};
  const double psi1 = twist_potential(kerr.S, base, target, {base, target});
  const double psi2 = twist_potential(
      kerr.S, base, target, {base, Vec{8.0, 1.2, 0.0}, Vec{6.0, 0.9, 0.0}, target});
  const double psi_diff = std::abs(psi1 - psi2);

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "norm %.2e (1e-8), div %.2e (1e-6), domega %.2e (1e-5), psi %.2e (1e-6)",
                norm, div, domega, psi_diff);
  report("twist_identities", norm < 1e-8 && div < 1e-6 && domega < 1e-5 && psi_diff < 1e-6,
         buf);
}

// --- criterion 5: harmonic map ----------------------------------------------
void harmonic_map() {
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  double tension = 0.0;
  for (const auto& p : sample_points(kerr, 20, 6)) {
    const auto [tx, ty] = tension_field(kerr.S, p);
    tension = std::max({tension, std::abs(tx), std::abs(ty)});
  }

  const CatalogEntry ads = make_ads(-3.0);
  double ads_res = 0.0;
  for (const auto& p : sample_points(ads, 20, 7)) {
    const auto [tx, ty] = tension_field(ads.S, p);
    const PointData pd = eval_point(ads.S, p);
    ads_res = std::max({ads_res, std::abs(tx), std::abs(ty - 2.0 * (-3.0) * pd.w())});
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "Kerr tension %.3e, AdS source residual %.3e (tol 1e-4)",
                tension, ads_res);
  report("harmonic_map", tension < 1e-4 && ads_res < 1e-4, buf);
}

// --- criterion 6: Bochner identities ----------------------------------------
void bochner_identities() {
  const CatalogEntry schw = make_schwarzschild(1.0);
  double res = 0.0;
  bool nonneg = true;
  for (double r : {3.0, 4.0, 6.0}) {
    const BochnerTerms b = bochner_terms(schw.S, Vec{r, kPi / 2.0, 0.0});
    res = std::max(res, b.residual);
    nonneg = nonneg && b.rhs >= 0.0;
  }
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  for (const auto& p : sample_points(kerr, 10, 8)) {
    const BochnerTerms b = bochner_terms(kerr.S, p);
    res = std::max(res, b.residual);
    nonneg = nonneg && b.rhs >= 0.0;
  }

  double stat = 0.0;
  for (double r : {3.0, 4.0, 6.0})
    stat = std::max(stat, static_bochner_residual(schw.S, Vec{r, kPi / 2.0, 0.0}));
  const CatalogEntry ads = make_ads(-3.0);
  for (const auto& p : sample_points(ads, 10, 9))
    stat = std::max(stat, static_bochner_residual(ads.S, p));

  char buf[160];
  std::snprintf(buf, sizeof buf, "map identity %.3e, static identity %.3e (tol 1e-3), RHS>=0 %s",
                res, stat, nonneg ? "yes" : "NO");
  report("bochner_identities", res < 1e-3 && stat < 1e-3 && nonneg, buf);
}

// --- criterion 7: geodesics ---------------------------------------------------
void geodesics_criterion() {
  const CatalogEntry schw = make_schwarzschild(1.0);
  const double omega = std::pow(6.0, -1.5);
  const double Tt = std::sqrt(2.0);
  const auto circ = integrate_geodesic(
      schw.S, MetricKind::lorentzian,
      state(0.0, Vec{6.0, kPi / 2.0, 0.0}, Tt, Vec{0.0, 0.0, Tt * omega}), 100.0, 1e-11);
  const auto radial = integrate_geodesic(
      schw.S, MetricKind::lorentzian,
      state(0.0, Vec{10.0, kPi / 2.0, 0.0}, 1.0 / std::sqrt(0.8), Vec{0.0, 0.0, 0.0}), 100.0,
      1e-11);
  const double drift = std::max(circ.max_c_drift(), radial.max_c_drift());

  // projected ODE vs projection of the full geodesic, three scenarios
  const CatalogEntry rot = make_minkowski_rotating(0.5);
  struct Scenario {
    const CatalogEntry& e;
    GeodesicState init;
    double s_end;
  };
  const std::vector<Scenario> scenarios = {
      {schw, state(0.0, Vec{10.0, kPi / 2.0, 0.0}, 1.0 / 0.8, Vec{0.05, 0.0, 0.0}), 10.0},
      {rot,
       state(0.0, Vec{0.5, 0.2, 0.0}, 1.0 / (1.0 - 0.0625), Vec{0.03, 0.05, 0.02}), 5.0},
      {schw, state(0.0, Vec{8.0, kPi / 2.0, 0.0}, std::sqrt(2.0) * 0.9, Vec{0.0, 0.01, 0.02}),
       10.0}};
  double agree = 0.0;
  for (const auto& sc : scenarios)
    for (double send : {0.5 * sc.s_end, sc.s_end}) {
      const auto full = integrate_geodesic(sc.e.S, MetricKind::lorentzian, sc.init, send, 1e-12);
      const auto red =
          projected_geodesic_integrate(sc.e.S, sc.init.x, sc.init.Ti, full.c, send, 1e-12);
      agree = std::max(agree, max_abs(full.samples.back().state.x - red.samples.back().x));
    }

  // pointwise length inequality on the runs above plus a Kerr segment
  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  const auto kseg = integrate_geodesic(
      kerr.S, MetricKind::lorentzian,
      state(0.0, Vec{6.0, kPi / 2.0, 0.0}, 1.2, Vec{0.0, 0.01, 0.06}), 10.0, 1e-10);
  bool length_ok = true;
  auto check_lengths = [&length_ok](const StationarySpacetime& S,
                                    const GeodesicTrajectory& traj) {
    const auto proj = horizontal_projection(S, traj);
    for (const auto& ps : proj.samples)
      length_ok = length_ok && ps.speed_hat <= ps.speed_hat_input + 1e-13;
  };
  check_lengths(schw.S, circ);
  check_lengths(schw.S, radial);
  check_lengths(kerr.S, kseg);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "c-drift %.3e (1e-8), projection agreement %.3e (1e-5), length ineq %s", drift,
                agree, length_ok ? "holds" : "FAILS");
  report("geodesics", drift < 1e-8 && agree < 1e-5 && length_ok, buf);
}

// --- criterion 8: estimate monitors -----------------------------------------
void estimate_monitors() {
  BallOptions opts;
  opts.ray_count = 16;
  opts.per_ray = 4;
  bool finite = true;

  // gradient monitor on the static entries
  for (const auto& spec : std::vector<std::pair<std::string, Vec>>{
           {"minkowski-static", Vec{0.0, 0.0, 0.0}},
           {"product-flat", Vec{0.0, 0.0, 0.0}},
           {"schwarzschild", Vec{6.0, kPi / 2.0, 0.0}},
           {"ads", Vec{0.5, 0.0, 0.0}}}) {
    const CatalogEntry e = entry_by_name(spec.first, {});
    const EstimateReport rep =
        gradient_estimate_ratio(e.S, e.name, spec.second, spec.first == "ads" ? 0.5 : 1.0, opts);
    finite = finite && std::isfinite(rep.implied_constant);
  }
  // curvature monitor on every entry (all are n = 3)
  for (const auto& spec : std::vector<std::pair<std::string, Vec>>{
           {"minkowski-static", Vec{0.0, 0.0, 0.0}},
           {"minkowski-rotating", Vec{0.8, 0.5, 0.0}},
           {"product-flat", Vec{0.0, 0.0, 0.0}},
           {"schwarzschild", Vec{6.0, kPi / 2.0, 0.0}},
           {"kerr", Vec{6.0, kPi / 2.0, 0.0}},
           {"ads", Vec{0.5, 0.0, 0.0}}}) {
    const CatalogEntry e = entry_by_name(spec.first, {});
    const CurvatureReports rep = curvature_estimate_ratio(
        e.S, e.name, spec.second, spec.first == "minkowski-rotating" ? 0.4 : 1.0, opts);
    finite = finite && std::isfinite(rep.riemann.implied_constant) &&
             std::isfinite(rep.h.implied_constant);
  }

  // scale invariance at k^2 = 4 (tight ray tolerance so the sup points match)
  opts.tol = 1e-12;
  const CatalogEntry schw = make_schwarzschild(1.0);
  const CatalogEntry big = rescale_entry(schw, 4.0);
  const Vec center{6.0, kPi / 2.0, 0.0};
  const EstimateReport g1 = gradient_estimate_ratio(schw.S, schw.name, center, 1.0, opts);
  const EstimateReport g2 = gradient_estimate_ratio(big.S, big.name, center, 2.0, opts);
  const CurvatureReports c1 = curvature_estimate_ratio(schw.S, schw.name, center, 1.0, opts);
  const CurvatureReports c2 = curvature_estimate_ratio(big.S, big.name, center, 2.0, opts);
  const double inv = std::max(std::abs(g1.implied_constant - g2.implied_constant),
                              std::abs(c1.riemann.implied_constant - c2.riemann.implied_constant));

  // two-scale diagnostic (reported, not thresholded)
  const CurvatureReports half = curvature_estimate_ratio(schw.S, schw.name, center, 0.5, opts);
  const double scale_a = c1.riemann.sup_value * 1.0;
  const double scale_half = half.riemann.sup_value * 0.25;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "finite %s; rescale drift %.2e (1e-6); sup*a^2 at a=1: %.3e, a=1/2: %.3e",
                finite ? "yes" : "NO", inv, scale_a, scale_half);
  report("estimate_monitors", finite && inv < 1e-6, buf);
}

// --- criterion 9: conformal machinery -----------------------------------------
void conformal_machinery() {
  double lap = 0.0, ric = 0.0;
  for (const auto& name : {"schwarzschild", "kerr", "ads", "minkowski-rotating"}) {
    const CatalogEntry e = entry_by_name(name, {});
    const std::vector<ScalarField> fields = {
        make_field("L1", 3, [](const auto& x) { return x[0]; }),
        make_field("L2", 3, [](const auto& x) { return x[1] * x[2]; }),
        make_field("L3", 3, [](const auto& x) { return x[0] * x[0]; }),
        make_field("L4", 3, [](const auto& x) { return x[0] * x[1] + x[2]; }),
        make_field("L5", 3, [](const auto& x) { return x[2] * x[2] * x[2]; })};
    const CoordinateMetric ctil = conformal_coordinate_metric(e.S);
    for (const auto& p : sample_points(e, 20, 10)) {
      const PointData pd = eval_point(e.S, p);
      const ConformalData cd = conformal_reduction(e.S, p);
      Vec dlogu(3);
      for (int i = 0; i < 3; ++i) dlogu[i] = pd.du[i] / pd.u;
      for (const auto& L : fields) {
        const Vec dL = L.grad(p);
        const Mat ddL = L.hess(p);
        lap = std::max(lap, std::abs(cd.conformal_factor * conformal_laplacian(cd, pd, dL, ddL) -
                                     horizontal_laplacian(pd, dL, ddL) -
                                     inner(pd.ginv, dlogu, dL)));
      }
      ric = std::max(ric, rel_diff(cd.ric_til, coordinate_ricci(ctil, p)));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "Laplacian relation %.3e (1e-7), Ric(gtil) vs oracle %.3e (1e-5)",
                lap, ric);
  report("conformal_machinery", lap < 1e-7 && ric < 1e-5, buf);
}

}  // namespace

int main() {
  std::printf("statgeo acceptance suite\n");
  oracle_equivalence();
  vacuum_suite();
  flatness_fixtures();
  twist_identities_criterion();
  harmonic_map();
  bochner_identities();
  geodesics_criterion();
  estimate_monitors();
  conformal_machinery();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
