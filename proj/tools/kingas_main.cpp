#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "kingas/csv.hpp"
#include "kingas/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kingas::IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonOpts {
  std::string config_path;
  std::string out_override;
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  int threads = 0;
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--config", o.config_path, "experiment config file")
      ->required();
  sub->add_option("--out", o.out_override, "output directory override");
  sub->add_option("--seed", o.seed_override, "seed override")
      ->each([&](const std::string&) { o.seed_set = true; });
  sub->add_option("--threads", o.threads,
                  "worker thread count (wall time only, never results)");
}

int dispatch(const CommonOpts& o, kingas::Regime regime) {
  if (o.threads > 0) {
#ifdef _OPENMP
    omp_set_num_threads(o.threads);
#endif
  }
  kingas::ExperimentConfig cfg = kingas::parse_config(slurp(o.config_path));
  cfg.regime = regime;
  if (!o.out_override.empty()) cfg.out_dir = o.out_override;
  if (o.seed_set) cfg.seed = o.seed_override;
  const auto files = kingas::run_case(cfg);
  for (const auto& f : files) std::cout << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kingas: 1D kinetic gas-dynamics laboratory"};
  app.require_subcommand(1);

  CommonOpts fm, ds, fv, rp;
  CLI::App* s_freemol =
      app.add_subcommand("freemol", "closed-form collisionless profiles");
  add_common(s_freemol, fm);
  CLI::App* s_dsmc = app.add_subcommand("dsmc", "particle simulation");
  add_common(s_dsmc, ds);
  CLI::App* s_fvm = app.add_subcommand("fvm", "finite-volume schemes");
  add_common(s_fvm, fv);
  CLI::App* s_riemann =
      app.add_subcommand("riemann", "exact Riemann solution");
  add_common(s_riemann, rp);

  std::vector<std::string> diag_inputs;
  std::string diag_out = ".";
  CLI::App* s_diag =
      app.add_subcommand("diag", "post-process profile CSVs");
  s_diag->add_option("inputs", diag_inputs, "profile CSV files")->required();
  s_diag->add_option("--out", diag_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_freemol->parsed()) return dispatch(fm, kingas::Regime::Freemol);
    if (s_dsmc->parsed()) return dispatch(ds, kingas::Regime::Dsmc);
    if (s_fvm->parsed()) return dispatch(fv, kingas::Regime::Fvm);
    if (s_riemann->parsed()) return dispatch(rp, kingas::Regime::Riemann);
    if (s_diag->parsed()) {
      std::cout << kingas::run_diag(diag_inputs, diag_out) << "\n";
      return 0;
    }
  } catch (const kingas::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const kingas::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
