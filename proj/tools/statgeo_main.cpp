// statgeo command-line front end
//
// Subcommands: check, geodesic, estimate, list. Reports are JSON (sorted
// keys, no timestamps), trajectories are CSV; identical config and seed give
// byte-identical output. Exit codes: 0 success, 1 tolerance failure (check),
// 2 configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "statgeo/catalog.hpp"
#include "statgeo/checks.hpp"
#include "statgeo/estimates.hpp"
#include "statgeo/geodesics.hpp"

using namespace statgeo;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "statgeo 1.0.0";
constexpr double kPi = 3.14159265358979323846;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParameterError("cannot open output file " + out_path);
    out << text << "\n";
  }
}

Vec parse_vec(const std::string& csv, int n) {
  Vec v(n);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    std::size_t next = 0;
    v[i] = std::stod(csv.substr(pos), &next);
    pos += next;
    if (i + 1 < n) {
      if (pos >= csv.size() || csv[pos] != ',')
        throw ParameterError("expected " + std::to_string(n) + " comma-separated values");
      ++pos;
    }
  }
  return v;
}

struct EntryFlags {
  std::map<std::string, double> params;
};

void add_entry_options(CLI::App* cmd, EntryFlags& flags, const char* spin_flag = "--a") {
  cmd->add_option_function<double>(
      "--M", [&flags](double v) { flags.params["M"] = v; }, "mass parameter");
  cmd->add_option_function<double>(
      spin_flag, [&flags](double v) { flags.params["a"] = v; }, "spin parameter");
  cmd->add_option_function<double>(
      "--omega", [&flags](double v) { flags.params["omega"] = v; }, "chart angular velocity");
  cmd->add_option_function<double>(
      "--lambda", [&flags](double v) { flags.params["lambda"] = v; }, "Einstein constant");
}

json estimate_to_json(const EstimateReport& rep) {
  json j;
  j["entry"] = rep.entry;
  j["monitor"] = rep.monitor;
  json center = json::array();
  for (int i = 0; i < rep.center.size(); ++i) center.push_back(rep.center[i]);
  j["center"] = center;
  j["a"] = rep.a;
  j["sup"] = rep.sup_value;
  j["bound_form"] = rep.bound_form;
  j["implied_constant"] = rep.implied_constant;
  j["lambda"] = rep.lambda;
  j["note"] = rep.note;
  json samples = json::array();
  for (const auto& [d, v] : rep.samples) samples.push_back({{"dist", d}, {"value", v}});
  j["samples"] = samples;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{kVersion};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- list -----------------------------------------------------------
  CLI::App* list_cmd = app.add_subcommand("list", "list catalog entries");

  // ---- check ----------------------------------------------------------
  CLI::App* check_cmd = app.add_subcommand("check", "run residual suites on an entry");
  std::string check_entry;
  EntryFlags check_flags;
  int samples = 50;
  std::uint64_t seed = 1;
  std::string tier = "analytic";
  bool serial = false;
  std::string check_out, check_config;
  check_cmd->add_option("ENTRY", check_entry, "catalog entry name");
  check_cmd->add_option("--entry", check_entry, "catalog entry name");
  add_entry_options(check_cmd, check_flags);
  check_cmd->add_option("--samples", samples, "interior sample points");
  check_cmd->add_option("--seed", seed, "sampling seed");
  check_cmd->add_option("--tol-tier", tier, "analytic or fd")
      ->check(CLI::IsMember({"analytic", "fd"}));
  check_cmd->add_flag("--serial", serial, "disable the OpenMP sweep path");
  double tol_scale = 1.0;
  check_cmd->add_option("--tol-scale", tol_scale, "multiply every tolerance (tighten to stress)");
  check_cmd->add_option("--out", check_out, "write the JSON report here");
  check_cmd->add_option("--config", check_config, "JSON config file (flags win)");

  // ---- geodesic -------------------------------------------------------
  CLI::App* geo_cmd = app.add_subcommand("geodesic", "integrate a geodesic, write CSV");
  std::string geo_entry, geo_out, geo_summary, geo_kind = "lorentzian", geo_init;
  EntryFlags geo_flags;
  double circular_r = 0.0, radial_from = 0.0, smax = 10.0, gtol = 1e-11;
  geo_cmd->add_option("ENTRY", geo_entry, "catalog entry name");
  geo_cmd->add_option("--entry", geo_entry, "catalog entry name");
  add_entry_options(geo_cmd, geo_flags);
  geo_cmd->add_option("--circular-r", circular_r, "equatorial circular orbit radius");
  geo_cmd->add_option("--radial-from", radial_from, "start at rest at this radius");
  geo_cmd->add_option("--init", geo_init, "t,x1,x2,x3,T0,T1,T2,T3 initial state");
  int fan = 0;
  std::uint64_t fan_seed = 7;
  geo_cmd->add_option("--fan", fan, "instead of one run: probe this many random rays");
  geo_cmd->add_option("--fan-seed", fan_seed, "fan direction seed");
  geo_cmd->add_option("--kind", geo_kind, "lorentzian or hat")
      ->check(CLI::IsMember({"lorentzian", "hat"}));
  geo_cmd->add_option("--smax", smax, "parameter length");
  geo_cmd->add_option("--tol", gtol, "integrator tolerance");
  geo_cmd->add_option("--out", geo_out, "trajectory CSV path");
  geo_cmd->add_option("--summary-out", geo_summary, "summary JSON path");

  // ---- estimate -------------------------------------------------------
  CLI::App* est_cmd = app.add_subcommand("estimate", "run an estimate monitor");
  std::string est_entry, est_out, monitor = "gradient", center_csv;
  EntryFlags est_flags;
  double center_r = 0.0, radius = 1.0;
  int rays = 64, per_ray = 16;
  std::uint64_t est_seed = 12345;
  est_cmd->add_option("ENTRY", est_entry, "catalog entry name");
  est_cmd->add_option("--entry", est_entry, "catalog entry name");
  add_entry_options(est_cmd, est_flags, "--spin");  // --a is the ball radius here
  est_cmd->add_option("--monitor", monitor, "gradient or curvature")
      ->check(CLI::IsMember({"gradient", "curvature"}));
  est_cmd->add_option("--center", center_csv, "ball center x1,x2,x3");
  est_cmd->add_option("--center-r", center_r, "equatorial center at this radius");
  est_cmd->add_option("--a", radius, "ball radius");
  est_cmd->add_option("--rays", rays, "fan size");
  est_cmd->add_option("--per-ray", per_ray, "samples per ray");
  est_cmd->add_option("--seed", est_seed, "direction seed");
  est_cmd->add_option("--out", est_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }

  try {
    if (*list_cmd) {
      json j;
      j["tool"] = kVersion;
      json entries = json::array();
      for (const auto& name : catalog_names()) {
        const CatalogEntry e = entry_by_name(name, {});
        json je;
        je["name"] = e.name;
        je["params"] = e.params;
        je["static"] = e.is_static;
        je["vacuum"] = e.vacuum;
        je["einstein"] = e.einstein;
        je["flat"] = e.flat;
        if (e.lambda) je["lambda"] = *e.lambda;
        entries.push_back(je);
      }
      j["entries"] = entries;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*check_cmd) {
      if (check_entry.empty()) throw ParameterError("check needs an entry name");
      if (!check_config.empty()) {
        // config file supplies defaults; explicit flags win
        std::ifstream in(check_config);
        if (!in) throw ParameterError("cannot open config file " + check_config);
        json cfg;
        try {
          cfg = json::parse(in);
        } catch (const json::exception& err) {
          throw ParameterError(std::string("config parse: ") + err.what());
        }
        if (!cfg.is_object()) throw ParameterError("config must be a JSON object");
        for (const auto& [key, value] : cfg.items()) {
          if (key == "samples") {
            if (!check_cmd->count("--samples")) samples = value.get<int>();
          } else if (key == "seed") {
            if (!check_cmd->count("--seed")) seed = value.get<std::uint64_t>();
          } else if (key == "tol-tier") {
            if (!check_cmd->count("--tol-tier")) tier = value.get<std::string>();
            if (tier != "analytic" && tier != "fd")
              throw ParameterError("tol-tier must be analytic or fd");
          } else if (key == "serial") {
            if (!check_cmd->count("--serial")) serial = value.get<bool>();
          } else if (key == "out") {
            if (!check_cmd->count("--out")) check_out = value.get<std::string>();
          } else if (key == "M" || key == "a" || key == "omega" || key == "lambda") {
            if (!check_flags.params.count(key)) check_flags.params[key] = value.get<double>();
          } else {
            throw ParameterError("unknown config key: " + key);
          }
        }
      }
      const CatalogEntry e = entry_by_name(check_entry, check_flags.params);
      CheckOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.tier = tier == "fd" ? TolTier::fd : TolTier::analytic;
      opts.mode = serial ? ExecMode::serial : ExecMode::parallel;
      opts.tol_scale = tol_scale;
      const SuiteReport rep = run_check_suite(e, opts);
      emit(suite_report_json(rep, e), check_out);
      return rep.pass ? 0 : 1;
    }

    if (*geo_cmd) {
      if (geo_entry.empty()) throw ParameterError("geodesic needs an entry name");
      const CatalogEntry e = entry_by_name(geo_entry, geo_flags.params);
      const MetricKind kind0 = geo_kind == "hat" ? MetricKind::hat : MetricKind::lorentzian;
      if (fan > 0) {
        // completeness probe: random unit rays from the first anchor
        std::mt19937_64 rng(fan_seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        const Vec center = e.anchors.at(0);
        std::vector<GeodesicState> rays;
        for (int k = 0; k < fan; ++k) {
          GeodesicState st;
          st.t = 0.0;
          st.x = center;
          st.T0 = normal(rng);
          st.Ti = Vec(e.S.n);
          for (int i = 0; i < e.S.n; ++i) st.Ti[i] = normal(rng);
          rays.push_back(st);
        }
        const ProbeReport probe = completeness_probe(e.S, kind0, rays, smax, gtol);
        json j;
        j["tool"] = kVersion;
        j["command"] = "geodesic";
        j["entry"] = e.name;
        j["params"] = e.params;
        j["kind"] = geo_kind;
        j["smax"] = smax;
        j["fan"] = fan;
        j["seed"] = fan_seed;
        j["reached_smax"] = probe.reached;
        j["left_domain"] = probe.left_domain;
        j["step_underflow"] = probe.underflow;
        json rays_json = json::array();
        for (const auto& ray : probe.rays)
          rays_json.push_back({{"exit", ray.exit == ExitReason::reached_smax
                                            ? "reached_smax"
                                            : (ray.exit == ExitReason::left_domain
                                                   ? "left_domain"
                                                   : "step_underflow")},
                               {"s_exit", ray.s_exit},
                               {"max_c_drift", ray.max_c_drift}});
        j["rays"] = rays_json;
        emit(j.dump(2), geo_summary);
        return 0;
      }
      GeodesicState init;
      if (!geo_init.empty()) {
        const Vec all = parse_vec(geo_init, 2 * (e.S.n + 1));
        init.t = all[0];
        init.x = Vec(e.S.n);
        for (int i = 0; i < e.S.n; ++i) init.x[i] = all[1 + i];
        init.T0 = all[e.S.n + 1];
        init.Ti = Vec(e.S.n);
        for (int i = 0; i < e.S.n; ++i) init.Ti[i] = all[e.S.n + 2 + i];
      } else if (circular_r > 0.0) {
        if (e.name != "schwarzschild" && e.name != "kerr")
          throw ParameterError("--circular-r supports schwarzschild and kerr");
        const double M = e.params.at("M");
        const double a = e.name == "kerr" ? e.params.at("a") : 0.0;
        const double r = circular_r;
        const double omega = std::sqrt(M) / (std::pow(r, 1.5) + a * std::sqrt(M));
        init.x = Vec{r, kPi / 2.0, 0.0};
        // normalize gbar(T,T) = -1 for the equatorial circular tangent
        const Mat gbar = metric_components(e.S, init.x);
        const double q = -(gbar(0, 0) + 2.0 * omega * gbar(0, 3) + omega * omega * gbar(3, 3));
        if (q <= 0.0) throw ParameterError("no timelike circular orbit at this radius");
        const double vt = 1.0 / std::sqrt(q);
        init.t = 0.0;
        const double vphi = vt * omega;
        init.Ti = Vec{0.0, 0.0, vphi};
        init.T0 = vt + vphi * e.S.theta[2].value(init.x);
      } else if (radial_from > 0.0) {
        init.t = 0.0;
        const bool spherical = e.name == "schwarzschild" || e.name == "kerr";
        init.x = spherical ? Vec{radial_from, kPi / 2.0, 0.0} : Vec{radial_from, 0.0, 0.0};
        if (!e.S.domain(init.x, 0.0)) throw ParameterError("start point outside the chart");
        init.T0 = 1.0 / e.S.u.value(init.x);
        init.Ti = Vec(e.S.n);
      } else {
        throw ParameterError("pick one of --circular-r, --radial-from, --init");
      }

      const GeodesicTrajectory traj = integrate_geodesic(e.S, kind0, init, smax, gtol);
      if (!geo_out.empty()) write_trajectory_csv(traj, geo_out);

      json j;
      j["tool"] = kVersion;
      j["command"] = "geodesic";
      j["entry"] = e.name;
      j["params"] = e.params;
      j["kind"] = geo_kind;
      j["smax"] = smax;
      j["tol"] = gtol;
      j["c"] = traj.c;
      j["exit"] = traj.exit == ExitReason::reached_smax
                      ? "reached_smax"
                      : (traj.exit == ExitReason::left_domain ? "left_domain" : "step_underflow");
      j["s_exit"] = traj.s_exit;
      j["max_c_drift"] = traj.max_c_drift();
      j["max_norm_drift"] = traj.max_norm_drift();
      j["samples"] = traj.samples.size();
      if (!geo_out.empty()) j["csv"] = geo_out;
      emit(j.dump(2), geo_summary);
      return 0;
    }

    if (*est_cmd) {
      if (est_entry.empty()) throw ParameterError("estimate needs an entry name");
      const CatalogEntry e = entry_by_name(est_entry, est_flags.params);
      Vec center;
      if (!center_csv.empty())
        center = parse_vec(center_csv, e.S.n);
      else if (center_r > 0.0)
        center = Vec{center_r, kPi / 2.0, 0.0};
      else
        center = e.anchors.at(0);

      BallOptions opts;
      opts.ray_count = rays;
      opts.per_ray = per_ray;
      opts.seed = est_seed;

      json j;
      j["tool"] = kVersion;
      j["command"] = "estimate";
      j["params"] = e.params;
      j["seed"] = est_seed;
      j["rays"] = rays;
      j["per_ray"] = per_ray;
      json reports = json::array();
      if (monitor == "gradient") {
        reports.push_back(estimate_to_json(gradient_estimate_ratio(e.S, e.name, center,
                                                                   radius, opts)));
      } else {
        const CurvatureReports cr = curvature_estimate_ratio(e.S, e.name, center, radius, opts);
        reports.push_back(estimate_to_json(cr.riemann));
        reports.push_back(estimate_to_json(cr.h));
      }
      j["reports"] = reports;
      emit(j.dump(2), est_out);
      return 0;
    }
  } catch (const ParameterError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
