// Timing harness for the two hot loops: DSMC replica advancement and the
// finite-volume flux sweep, serial reference vs OpenMP.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kingas/dsmc.hpp"
#include "kingas/fvm.hpp"
#include "kingas/riemann.hpp"

using namespace kingas;

namespace {

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void bench_dsmc() {
  const GasModel gm = GasModel::argon();
  DsmcConfig cfg;
  cfg.ic = make_contact_ic({1e20 * gm.m, 0.0, 273.0}, 8.0, gm);
  cfg.half_length_lambda = 20.0;
  cfg.cells_per_lambda = 3.0;
  cfg.particles_per_cell = 100.0;
  cfg.dt_tau = 0.1;
  cfg.replicas = 8;
  cfg.sample_times_tau = {5.0};
  cfg.seed = 1;

  const double ts = timed([&] { run_unsteady(cfg, gm, false); });
  const double tp = timed([&] { run_unsteady(cfg, gm, true); });
  std::printf("dsmc   replicas=%zu  serial %.3f s  parallel %.3f s  speedup %.2fx\n",
              cfg.replicas, ts, tp, ts / tp);
}

void bench_fvm() {
  const GasModel gm = GasModel::ideal(1.4);
  const GasState left{1.0, 0.0, 1.0};
  const GasState right{0.125, 0.0, 0.8};
  Grid1D grid = make_grid(
      20000, 0.0, 1.0, [&](double x) { return x < 0.5 ? left : right; },
      Boundary{}, Boundary{}, gm);
  SchemeConfig scheme;
  scheme.flux = FluxKind::Gks;
  scheme.limiter = Limiter::VanLeer;

  Grid1D a = grid, b = grid;
  const int steps = 200;
  const double ts = timed([&] {
    for (int k = 0; k < steps; ++k) step(a, scheme, gm, 0.0, false);
  });
  const double tp = timed([&] {
    for (int k = 0; k < steps; ++k) step(b, scheme, gm, 0.0, true);
  });
  std::printf("fvm    cells=%zu steps=%d  serial %.3f s  parallel %.3f s  speedup %.2fx\n",
              grid.n, steps, ts, tp, ts / tp);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  bench_dsmc();
  bench_fvm();
  return 0;
}
