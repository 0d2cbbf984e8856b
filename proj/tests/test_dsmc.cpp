#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kingas/dsmc.hpp"
#include "kingas/riemann.hpp"

using namespace kingas;

namespace {

const GasModel kArgon = GasModel::argon();
const double kN1 = 1e20;  // reference number density

GasState ref_state() { return {kN1 * kArgon.m, 0.0, 273.0}; }

DsmcConfig uniform_box() {
  DsmcConfig cfg;
  cfg.ic = {ref_state(), ref_state(), IcKind::Generic};
  cfg.half_length_lambda = 5.0;
  cfg.cells_per_lambda = 3.0;
  cfg.particles_per_cell = 60.0;
  cfg.dt_tau = 0.1;
  cfg.replicas = 2;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("configuration limits are enforced") {
  DsmcConfig cfg = uniform_box();
  cfg.dt_tau = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = uniform_box();
  cfg.cells_per_lambda = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = uniform_box();
  cfg.replicas = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  uniform_box().validate();
}

TEST_CASE("normalization scales match the reference state") {
  const DsmcConfig cfg = uniform_box();
  const DsmcScales sc = dsmc_scales(cfg, kArgon);
  CHECK(sc.lambda1 ==
        doctest::Approx(mean_free_path(ref_state(), kArgon)).epsilon(1e-13));
  CHECK(sc.tau1 == doctest::Approx(mean_collision_time(ref_state(), kArgon))
                       .epsilon(1e-13));
}

TEST_CASE("initial ensemble reproduces the equilibrium moments") {
  DsmcConfig cfg = uniform_box();
  cfg.particles_per_cell = 400.0;
  const ParticleEnsemble ens = init_ensemble(cfg, kArgon, 0);
  const std::size_t n = ens.size();
  const double expected = cfg.particles_per_cell * cfg.cells_per_lambda * 2.0 *
                          cfg.half_length_lambda;
  CHECK(std::abs(static_cast<double>(n) - expected) < 6.0 * std::sqrt(expected));
  double su = 0.0, sv2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    su += ens.vx[i];
    sv2 += ens.vx[i] * ens.vx[i] + ens.vy[i] * ens.vy[i] +
           ens.vz[i] * ens.vz[i];
  }
  const double u_mean = su / n;
  const double T_mean = sv2 / n / (3.0 * kArgon.R);
  const double sigma_u = std::sqrt(kArgon.R * 273.0 / n);
  CHECK(std::abs(u_mean) < 6.0 * sigma_u);
  CHECK(T_mean == doctest::Approx(273.0).epsilon(0.02));
  // fnum accounts for every physical molecule in a cell.
  const double dx = ens.dx();
  CHECK(ens.fnum * cfg.particles_per_cell ==
        doctest::Approx(kN1 * dx).epsilon(1e-12));
}

TEST_CASE("pair collisions conserve momentum and energy") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::array<double, 3> a{300.0 * rng.normal(), 300.0 * rng.normal(),
                            300.0 * rng.normal()};
    std::array<double, 3> b{300.0 * rng.normal(), 300.0 * rng.normal(),
                            300.0 * rng.normal()};
    std::array<double, 3> a0 = a, b0 = b;
    collide_pair(a, b, rng);
    double e0 = 0.0, e1 = 0.0;
    for (int k = 0; k < 3; ++k) {
      CHECK(a[k] + b[k] ==
            doctest::Approx(a0[k] + b0[k]).epsilon(1e-12).scale(300.0));
      e0 += a0[k] * a0[k] + b0[k] * b0[k];
      e1 += a[k] * a[k] + b[k] * b[k];
    }
    CHECK(e1 == doctest::Approx(e0).epsilon(1e-12));
    // Relative speed is preserved, direction redrawn.
    double cr0 = 0.0, cr1 = 0.0;
    for (int k = 0; k < 3; ++k) {
      cr0 += (a0[k] - b0[k]) * (a0[k] - b0[k]);
      cr1 += (a[k] - b[k]) * (a[k] - b[k]);
    }
    CHECK(cr1 == doctest::Approx(cr0).epsilon(1e-12));
  }
}

TEST_CASE("collision rate matches the equilibrium frequency") {
  DsmcConfig cfg = uniform_box();
  cfg.replicas = 1;
  const DsmcScales sc = dsmc_scales(cfg, kArgon);
  ParticleEnsemble ens = init_ensemble(cfg, kArgon, 0);
  const double dt = cfg.dt_tau * sc.tau1;
  // Warm-up lets the per-cell majorant settle.
  for (int k = 0; k < 50; ++k) advance(ens, kArgon, dt);
  std::size_t collisions = 0;
  double weighted_particles = 0.0;
  const int steps = 400;
  for (int k = 0; k < steps; ++k) {
    weighted_particles += static_cast<double>(ens.size());
    collisions += advance(ens, kArgon, dt);
  }
  const double rate =
      2.0 * static_cast<double>(collisions) / (weighted_particles * dt);
  const double nu = vhs_collision_frequency(kN1, 273.0, kArgon);
  CHECK(nu == doctest::Approx(1.0 / sc.tau1).epsilon(1e-12));
  CHECK(rate == doctest::Approx(nu).epsilon(0.02));
}

TEST_CASE("equilibrium box stays in equilibrium") {
  DsmcConfig cfg = uniform_box();
  cfg.replicas = 6;
  cfg.sample_times_tau = {20.0};
  const auto profiles = run_unsteady(cfg, kArgon, false);
  REQUIRE(profiles.size() == 1);
  const Profile& p = profiles[0];
  double t_sum = 0.0, rho_sum = 0.0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (std::isnan(p.Ttot[i])) continue;
    t_sum += p.Ttot[i];
    rho_sum += p.rho[i];
    ++cnt;
  }
  REQUIRE(cnt > 0);
  CHECK(t_sum / cnt == doctest::Approx(273.0).epsilon(0.02));
  CHECK(rho_sum / cnt == doctest::Approx(ref_state().rho).epsilon(0.03));
}

TEST_CASE("identical seeds give bitwise identical runs") {
  DsmcConfig cfg = uniform_box();
  cfg.ic = make_contact_ic(ref_state(), 4.0, kArgon);
  cfg.half_length_lambda = 8.0;
  cfg.particles_per_cell = 40.0;
  cfg.replicas = 3;
  cfg.sample_times_tau = {1.0, 2.0};
  const auto a = run_unsteady(cfg, kArgon, false);
  const auto b = run_unsteady(cfg, kArgon, false);
  const auto c = run_unsteady(cfg, kArgon, true);  // threaded replica loop
  REQUIRE(a.size() == 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t i = 0; i < a[k].x.size(); ++i) {
      auto same = [&](double u, double v) {
        return (std::isnan(u) && std::isnan(v)) || u == v;
      };
      CHECK(same(a[k].rho[i], b[k].rho[i]));
      CHECK(same(a[k].rho[i], c[k].rho[i]));
      CHECK(same(a[k].U[i], c[k].U[i]));
      CHECK(same(a[k].Tx[i], c[k].Tx[i]));
      CHECK(same(a[k].Tn[i], c[k].Tn[i]));
    }
  }
  // A different seed must actually change the sampled noise.
  cfg.seed += 1;
  const auto d = run_unsteady(cfg, kArgon, false);
  bool any_diff = false;
  for (std::size_t i = 0; i < a[0].x.size(); ++i) {
    if (!std::isnan(a[0].rho[i]) && a[0].rho[i] != d[0].rho[i]) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("checkpoints restore a replica bit for bit") {
  DsmcConfig cfg = uniform_box();
  cfg.ic = make_contact_ic(ref_state(), 8.0, kArgon);
  const DsmcScales sc = dsmc_scales(cfg, kArgon);
  ParticleEnsemble ens = init_ensemble(cfg, kArgon, 1);
  const double dt = cfg.dt_tau * sc.tau1;
  for (int k = 0; k < 10; ++k) advance(ens, kArgon, dt);
  std::stringstream buf;
  save_checkpoint(ens, buf);
  ParticleEnsemble copy = load_checkpoint(buf);
  REQUIRE(copy.size() == ens.size());
  CHECK(copy.time == ens.time);
  CHECK(copy.fnum == ens.fnum);
  for (int k = 0; k < 10; ++k) {
    advance(ens, kArgon, dt);
    advance(copy, kArgon, dt);
  }
  for (std::size_t i = 0; i < ens.size(); ++i) {
    CHECK(copy.x[i] == ens.x[i]);
    CHECK(copy.vx[i] == ens.vx[i]);
    CHECK(copy.vy[i] == ens.vy[i]);
    CHECK(copy.vz[i] == ens.vz[i]);
  }
}

TEST_CASE("collisionless runs track the closed-form contact layer") {
  DsmcConfig cfg;
  cfg.ic = make_contact_ic(ref_state(), 8.0, kArgon);
  cfg.half_length_lambda = 15.0;
  cfg.cells_per_lambda = 2.0;
  cfg.particles_per_cell = 200.0;
  cfg.dt_tau = 0.1;
  cfg.replicas = 10;
  cfg.collisions = false;
  cfg.sample_cells_per_lambda = 1.0;
  cfg.sample_times_tau = {2.0};
  cfg.seed = 11;
  const DsmcScales sc = dsmc_scales(cfg, kArgon);
  const auto profiles = run_unsteady(cfg, kArgon, true);
  const Profile& p = profiles.back();
  const double t = 2.0 * sc.tau1;
  double l1 = 0.0;
  std::size_t cnt = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (std::isnan(p.rho[i])) continue;
    const double x = p.x[i] * sc.lambda1;
    const PointState exact = freemol::profile(cfg.ic, kArgon, x, t);
    const double rel = std::abs(p.rho[i] - exact.rho) / exact.rho;
    CHECK(rel < 0.2);
    CHECK(std::abs(p.Ttot[i] - total_temperature(exact.Tx, exact.Tn)) /
              exact.Tn <
          0.4);
    l1 += rel;
    ++cnt;
  }
  REQUIRE(cnt > 20);
  CHECK(l1 / cnt < 0.04);
}
