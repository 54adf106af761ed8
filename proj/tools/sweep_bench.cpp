// Benchmark: serial reference vs OpenMP sweeps on the heavy per-point kernels.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "statgeo/catalog.hpp"
#include "statgeo/estimates.hpp"
#include "statgeo/frame_geometry.hpp"
#include "statgeo/oracle.hpp"
#include "statgeo/reduction4d.hpp"
#include "statgeo/sweep.hpp"

using namespace statgeo;

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <class Fn>
void bench(const std::string& name, int count, Fn&& fn) {
  // warm up with a few evaluations so first-touch effects drop out
  volatile double sink = fn(0) + fn(count / 2);
  (void)sink;

  const double t0 = now_ms();
  const double serial = sweep_max(count, ExecMode::serial, fn);
  const double t1 = now_ms();
  const double parallel = sweep_max(count, ExecMode::parallel, fn);
  const double t2 = now_ms();

  const double ts = t1 - t0, tp = t2 - t1;
  std::printf("%-26s %6d pts   serial %8.1f ms   omp %8.1f ms   speedup %5.2fx   %s\n",
              name.c_str(), count, ts, tp, tp > 0 ? ts / tp : 0.0,
              serial == parallel ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int count = 2000;
  if (argc > 1) count = std::atoi(argv[1]);
  std::printf("sweep benchmark, %d threads\n", sweep_threads());

  const CatalogEntry kerr = make_kerr(1.0, 0.5);
  const std::vector<Vec> pts = sample_points(kerr, count, 42);
  const CoordinateMetric cm = spacetime_coordinate_metric(kerr.S);

  bench("ricci_blocks", count, [&](int i) {
    const RicciBlocks r = ricci_blocks(kerr.S, pts[i]);
    return std::abs(r.ric00) + max_abs(r.ricij);
  });

  bench("curvature_blocks", count, [&](int i) {
    return max_abs(curvature_blocks(kerr.S, pts[i]).rm_ijkl);
  });

  bench("oracle_riemann", count / 4, [&](int i) {
    Vec pf(4);
    for (int k = 0; k < 3; ++k) pf[k + 1] = pts[i][k];
    return max_abs(coordinate_riemann(cm, pf));
  });

  bench("twist_identities", count, [&](int i) {
    const TwistResiduals res = twist_identities(kerr.S, pts[i]);
    return res.norm + res.divergence + res.curl;
  });

  bench("riemann_norm_hat", count / 4, [&](int i) {
    return riemann_norm_hat(kerr.S, pts[i]);
  });

  return 0;
}
