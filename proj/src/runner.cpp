#include "kingas/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include "kingas/csv.hpp"
#include "kingas/riemann.hpp"

namespace kingas {

namespace fs = std::filesystem;

namespace {

std::string time_tag(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

Profile pointstate_profile(const std::vector<double>& x_lambda,
                           const std::vector<PointState>& states, double t,
                           ProfileSource source) {
  Profile p;
  p.t = t;
  p.source = source;
  p.x = x_lambda;
  for (const PointState& s : states) {
    p.rho.push_back(s.rho);
    p.U.push_back(s.U);
    p.Tn.push_back(s.Tn);
    p.Tx.push_back(s.Tx);
    p.Ttot.push_back(total_temperature(s.Tx, s.Tn));
  }
  return p;
}

std::vector<Profile> run_freemol(const ExperimentConfig& cfg,
                                 const DiscontinuityIC& ic, bool parallel) {
  const GasModel& gm = cfg.gas;
  const double lambda1 = mean_free_path(ic.left, gm);
  const double tau1 = mean_collision_time(ic.left, gm);
  const auto n = static_cast<std::size_t>(
      std::ceil(2.0 * cfg.fm_half_length_lambda * cfg.fm_points_per_lambda));
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = -cfg.fm_half_length_lambda +
            (static_cast<double>(i) + 0.5) * 2.0 * cfg.fm_half_length_lambda /
                static_cast<double>(n);

  std::vector<Profile> out;
  for (double t : cfg.times) {
    std::vector<PointState> states(n);
    auto eval = [&](std::size_t i) {
      states[i] = freemol::profile(ic, gm, xs[i] * lambda1, t * tau1);
    };
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(n); ++i)
        eval(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < n; ++i) eval(i);
    }
    out.push_back(pointstate_profile(xs, states, t, ProfileSource::Freemol));
  }
  return out;
}

std::vector<Profile> run_dsmc_case(const ExperimentConfig& cfg,
                                   const DiscontinuityIC& ic, bool parallel) {
  DsmcConfig dc;
  dc.ic = ic;
  dc.half_length_lambda = cfg.dsmc_half_length_lambda;
  dc.cells_per_lambda = cfg.dsmc_cells_per_lambda;
  dc.particles_per_cell = cfg.dsmc_particles_per_cell;
  dc.dt_tau = cfg.dsmc_dt_tau;
  dc.replicas = cfg.dsmc_replicas;
  dc.sample_times_tau = cfg.times;
  dc.seed = cfg.seed;
  dc.collisions = cfg.dsmc_collisions;
  dc.sample_cells_per_lambda = cfg.dsmc_sample_cells_per_lambda;
  return run_unsteady(dc, cfg.gas, parallel);
}

std::vector<Profile> run_fvm_case(const ExperimentConfig& cfg,
                                  const DiscontinuityIC& ic, bool parallel) {
  const GasModel& gm = cfg.gas;
  SchemeConfig scheme;
  scheme.flux = cfg.fvm_flux;
  scheme.limiter = cfg.fvm_limiter;
  scheme.cfl = cfg.fvm_cfl;
  scheme.gks.c_jump = cfg.fvm_c_jump;

  Grid1D grid;
  double x_scale = 1.0, t_scale = 1.0;
  std::string x_unit = "m", t_unit = "s";
  if (cfg.case_kind == CaseKind::Sod) {
    Boundary zg{BoundaryType::ZeroGradient, {}};
    grid = make_grid(
        cfg.fvm_cells, 0.0, 1.0,
        [&](double x) { return x < 0.5 ? ic.left : ic.right; }, zg, zg, gm);
    x_unit = t_unit = "scheme";
  } else {
    const double lambda1 = mean_free_path(ic.left, gm);
    x_scale = lambda1;
    t_scale = mean_collision_time(ic.left, gm);
    x_unit = "lambda1";
    t_unit = "tau1";
    Boundary bl{BoundaryType::FixedState, ic.left};
    Boundary br{BoundaryType::FixedState, ic.right};
    const double L = cfg.fvm_domain_lambda * lambda1;
    grid = make_grid(
        cfg.fvm_cells, -L, L,
        [&](double x) { return x < 0.0 ? ic.left : ic.right; }, bl, br, gm);
  }

  std::vector<double> times;
  for (double t : cfg.times) times.push_back(t * t_scale);
  std::vector<Profile> out =
      run(grid, scheme, gm, times, times.back(), parallel);
  for (auto& p : out) {
    for (double& x : p.x) x /= x_scale;
    p.t /= t_scale;
    p.x_unit = x_unit;
    p.t_unit = t_unit;
  }
  return out;
}

std::vector<Profile> run_riemann_case(const ExperimentConfig& cfg,
                                      const DiscontinuityIC& ic,
                                      std::string& extra_manifest) {
  const GasModel& gm = cfg.gas;
  const RiemannFan fan = exact_riemann(ic.left, ic.right, gm);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "p_star = %.17g\nu_star = %.17g\nleft_wave = %s\nright_wave = "
                "%s\n",
                fan.p_star, fan.u_star,
                fan.left_wave == WaveKind::Shock ? "shock" : "rarefaction",
                fan.right_wave == WaveKind::Shock ? "shock" : "rarefaction");
  extra_manifest = buf;

  double x0 = 0.0, x_lo = -0.5, x_hi = 0.5, x_scale = 1.0, t_scale = 1.0;
  if (cfg.case_kind == CaseKind::Sod) {
    x0 = 0.5;
    x_lo = 0.0;
    x_hi = 1.0;
  } else {
    x_scale = mean_free_path(ic.left, gm);
    t_scale = mean_collision_time(ic.left, gm);
    x_lo = -cfg.fm_half_length_lambda;
    x_hi = cfg.fm_half_length_lambda;
  }
  const auto n = static_cast<std::size_t>(
      std::ceil((x_hi - x_lo) * cfg.fm_points_per_lambda));

  std::vector<Profile> out;
  for (double t : cfg.times) {
    Profile p;
    p.t = t;
    p.source = ProfileSource::Fvm;
    p.x_unit = cfg.case_kind == CaseKind::Sod ? "scheme" : "lambda1";
    p.t_unit = cfg.case_kind == CaseKind::Sod ? "scheme" : "tau1";
    for (std::size_t i = 0; i < n; ++i) {
      const double x =
          x_lo + (static_cast<double>(i) + 0.5) * (x_hi - x_lo) /
                     static_cast<double>(n);
      const double xi = (x - x0) * x_scale / (t * t_scale);
      const GasState s = fan.sample(gm, xi);
      p.x.push_back(x);
      p.rho.push_back(s.rho);
      p.U.push_back(s.u);
      p.Tn.push_back(s.T);
      p.Tx.push_back(s.T);
      p.Ttot.push_back(s.T);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

DiscontinuityIC make_case_ic(const ExperimentConfig& cfg) {
  const GasState ref{cfg.ref_rho, 0.0, cfg.ref_T};
  switch (cfg.case_kind) {
    case CaseKind::Contact:
      return make_contact_ic(ref, cfg.strength, cfg.gas);
    case CaseKind::Shock: {
      const double Ma = cfg.mach > 0.0
                            ? cfg.mach
                            : mach_from_temperature_ratio(cfg.strength);
      return make_shock_ic(Ma, ref, cfg.gas);
    }
    case CaseKind::Sod: {
      DiscontinuityIC ic;
      ic.kind = IcKind::Generic;
      ic.left = {1.0, 0.0, 1.0 / (1.0 * cfg.gas.R)};
      ic.right = {0.125, 0.0, 0.1 / (0.125 * cfg.gas.R)};
      return ic;
    }
    case CaseKind::Custom:
    default: {
      DiscontinuityIC ic;
      ic.kind = IcKind::Generic;
      ic.left = cfg.custom_left;
      ic.right = cfg.custom_right;
      return ic;
    }
  }
}

std::vector<std::string> run_case(const ExperimentConfig& cfg, bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  const DiscontinuityIC ic = make_case_ic(cfg);

  std::string extra_manifest;
  std::vector<Profile> profiles;
  switch (cfg.regime) {
    case Regime::Freemol:
      profiles = run_freemol(cfg, ic, parallel);
      break;
    case Regime::Dsmc:
      profiles = run_dsmc_case(cfg, ic, parallel);
      break;
    case Regime::Fvm:
      profiles = run_fvm_case(cfg, ic, parallel);
      break;
    case Regime::Riemann:
      profiles = run_riemann_case(cfg, ic, extra_manifest);
      break;
  }

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + cfg.out_dir);

  std::vector<std::string> files;
  std::vector<DiagnosticsRow> rows;
  for (const Profile& p : profiles) {
    const std::string path =
        (fs::path(cfg.out_dir) / ("profile_t" + time_tag(p.t) + ".csv"))
            .string();
    write_profile_csv(path, p);
    files.push_back(path);
    rows.push_back(diagnostics_row(p));
  }
  const std::string diag_path =
      (fs::path(cfg.out_dir) / "diagnostics.csv").string();
  write_diagnostics_csv(diag_path, rows);
  files.push_back(diag_path);

  const auto t1 = std::chrono::steady_clock::now();
  const double wall = std::chrono::duration<double>(t1 - t0).count();
  const std::string manifest_path =
      (fs::path(cfg.out_dir) / "manifest.txt").string();
  {
    std::ofstream mf(manifest_path, std::ios::binary);
    if (!mf) throw IoError("cannot write manifest " + manifest_path);
    mf << "# kingas run manifest\n";
    mf << "version = 0.1.0\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", wall);
    mf << "wall_time_s = " << buf << "\n";
    if (cfg.case_kind != CaseKind::Sod && cfg.case_kind != CaseKind::Custom) {
      mf << "lambda1_m = ";
      std::snprintf(buf, sizeof(buf), "%.17g", mean_free_path(ic.left, cfg.gas));
      mf << buf << "\ntau1_s = ";
      std::snprintf(buf, sizeof(buf), "%.17g",
                    mean_collision_time(ic.left, cfg.gas));
      mf << buf << "\n";
    }
    if (!extra_manifest.empty()) mf << extra_manifest;
    mf << "# resolved configuration\n";
    mf << render_config(cfg);
    if (!mf) throw IoError("manifest write failed");
  }
  files.push_back(manifest_path);
  return files;
}

std::string run_diag(const std::vector<std::string>& inputs,
                     const std::string& out_dir) {
  std::vector<DiagnosticsRow> rows;
  for (const std::string& path : inputs) {
    Profile p = read_profile_csv(path);
    // Recover the time stamp from the profile_t<t>.csv naming convention.
    const std::string name = fs::path(path).filename().string();
    double t = std::numeric_limits<double>::quiet_NaN();
    if (name.rfind("profile_t", 0) == 0)
      t = std::atof(name.c_str() + 9);
    p.t = t;
    rows.push_back(diagnostics_row(p));
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir);
  const std::string out = (fs::path(out_dir) / "diagnostics.csv").string();
  write_diagnostics_csv(out, rows);
  return out;
}

}  // namespace kingas
