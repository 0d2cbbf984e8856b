#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kingas/config.hpp"
#include "kingas/csv.hpp"
#include "kingas/runner.hpp"

using namespace kingas;
namespace fs = std::filesystem;

namespace {

const char* cli_path() { return std::getenv("KINGAS_CLI"); }

fs::path fresh_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("kingas_test_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

const char* kMinimalFreemol =
    "case = contact\n"
    "strength = 8\n"
    "regime = freemol\n"
    "times = 1\n";

}  // namespace

TEST_CASE("minimal config fills in the documented defaults") {
  const ExperimentConfig cfg = parse_config(kMinimalFreemol);
  CHECK(cfg.case_kind == CaseKind::Contact);
  CHECK(cfg.regime == Regime::Freemol);
  CHECK(cfg.strength == doctest::Approx(8.0));
  CHECK(cfg.seed == 1);
  CHECK(cfg.ref_T == doctest::Approx(273.0));
  CHECK(cfg.dsmc_particles_per_cell == doctest::Approx(100.0));
  CHECK(cfg.fvm_cfl == doctest::Approx(0.5));
  CHECK(cfg.fvm_flux == FluxKind::Godunov);
}

TEST_CASE("unknown keys are rejected by name and line") {
  const std::string text = std::string(kMinimalFreemol) + "foo = 1\n";
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("foo"),
                       ConfigError);
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("malformed values are rejected with their location") {
  std::string text = kMinimalFreemol;
  text.replace(text.find("strength = 8"), 12, "strength = x");
  CHECK_THROWS_WITH_AS(parse_config(text), doctest::Contains("strength"),
                       ConfigError);
}

TEST_CASE("expanding shock jumps are rejected") {
  std::string text = "case = shock\nstrength = 0.5\nregime = freemol\ntimes = 1\n";
  CHECK_THROWS_AS(parse_config(text), ConfigError);
  text = "case = contact\nstrength = -1\nregime = freemol\ntimes = 1\n";
  CHECK_THROWS_AS(parse_config(text), ConfigError);
}

TEST_CASE("sod runs only in continuum regimes") {
  const std::string text = "case = sod\nregime = dsmc\ntimes = 1\n";
  CHECK_THROWS_AS(parse_config(text), ConfigError);
}

TEST_CASE("rendered configs parse back to the same experiment") {
  ExperimentConfig cfg = parse_config(kMinimalFreemol);
  cfg.seed = 99;
  cfg.times = {0.5, 1.0, 32.0};
  cfg.dsmc_replicas = 7;
  cfg.fvm_flux = FluxKind::Gks;
  const std::string text = render_config(cfg);
  const ExperimentConfig back = parse_config(text);
  CHECK(back.case_kind == cfg.case_kind);
  CHECK(back.regime == cfg.regime);
  CHECK(back.strength == cfg.strength);
  CHECK(back.seed == 99);
  CHECK(back.times == cfg.times);
  CHECK(back.dsmc_replicas == 7);
  CHECK(back.fvm_flux == FluxKind::Gks);
  CHECK(render_config(back) == text);
}

TEST_CASE("case initial conditions follow the config") {
  ExperimentConfig cfg = parse_config(kMinimalFreemol);
  const DiscontinuityIC ic = make_case_ic(cfg);
  CHECK(ic.kind == IcKind::Contact);
  CHECK(ic.right.T / ic.left.T == doctest::Approx(8.0).epsilon(1e-13));
  CHECK(ic.left.T == doctest::Approx(273.0));
}

TEST_CASE("profile csv round trip keeps full precision") {
  const fs::path dir = fresh_dir("csv");
  Profile p;
  p.t = 0.123456789012345678;
  for (int i = 0; i < 5; ++i) {
    p.x.push_back(i * 0.3 + 1.0 / 3.0);
    p.rho.push_back(1.0 / (i + 3.0));
    p.U.push_back(std::sqrt(2.0) * i);
    p.Tn.push_back(273.0 + i);
    p.Tx.push_back(273.0 - i);
    p.Ttot.push_back(total_temperature(p.Tx.back(), p.Tn.back()));
  }
  const fs::path file = dir / "profile.csv";
  write_profile_csv(file.string(), p);
  const Profile q = read_profile_csv(file.string());
  REQUIRE(q.x.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(q.x[i] == p.x[i]);
    CHECK(q.rho[i] == p.rho[i]);
    CHECK(q.U[i] == p.U[i]);
    CHECK(q.Tn[i] == p.Tn[i]);
    CHECK(q.Tx[i] == p.Tx[i]);
  }
  CHECK_THROWS_AS(read_profile_csv((dir / "absent.csv").string()), IoError);
}

TEST_CASE("cli runs a case and writes the advertised files") {
  REQUIRE(cli_path() != nullptr);
  const fs::path dir = fresh_dir("cli_run");
  const fs::path cfgf = dir / "case.ini";
  write_file(cfgf, kMinimalFreemol);
  const int rc = run_cli("freemol --config " + cfgf.string() + " --out " +
                         (dir / "out").string());
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "out" / "profile_t1.csv"));
  CHECK(fs::exists(dir / "out" / "diagnostics.csv"));
  CHECK(fs::exists(dir / "out" / "manifest.txt"));
  const std::string manifest = read_file(dir / "out" / "manifest.txt");
  CHECK(manifest.find("case = contact") != std::string::npos);

  // Re-running reproduces the outputs byte for byte.
  const int rc2 = run_cli("freemol --config " + cfgf.string() + " --out " +
                          (dir / "out2").string());
  CHECK(rc2 == 0);
  CHECK(read_file(dir / "out" / "profile_t1.csv") ==
        read_file(dir / "out2" / "profile_t1.csv"));
  CHECK(read_file(dir / "out" / "diagnostics.csv") ==
        read_file(dir / "out2" / "diagnostics.csv"));

  // Post-processing the profile gives the same diagnostics numbers.
  const int rc3 = run_cli("diag " + (dir / "out" / "profile_t1.csv").string() +
                          " --out " + (dir / "diag").string());
  CHECK(rc3 == 0);
  CHECK(fs::exists(dir / "diag" / "diagnostics.csv"));
}

TEST_CASE("cli exit codes distinguish failure classes") {
  REQUIRE(cli_path() != nullptr);
  const fs::path dir = fresh_dir("cli_err");
  const fs::path bad = dir / "bad.ini";
  write_file(bad, std::string(kMinimalFreemol) + "foo = 1\n");
  CHECK(run_cli("freemol --config " + bad.string() + " --out " +
                (dir / "o").string()) == 1);
  CHECK(run_cli("freemol --config " + (dir / "missing.ini").string() +
                " --out " + (dir / "o").string()) == 3);
  CHECK(run_cli("diag " + (dir / "missing.csv").string() + " --out " +
                (dir / "o").string()) == 3);
}

TEST_CASE("thread count never changes the numbers") {
  REQUIRE(cli_path() != nullptr);
  const fs::path dir = fresh_dir("cli_threads");
  const std::string cfg =
      "case = contact\n"
      "strength = 8\n"
      "regime = dsmc\n"
      "times = 1\n"
      "seed = 3\n"
      "[dsmc]\n"
      "half_length_lambda = 6\n"
      "particles_per_cell = 30\n"
      "replicas = 4\n";
  const fs::path cfgf = dir / "case.ini";
  write_file(cfgf, cfg);
  CHECK(run_cli("dsmc --config " + cfgf.string() + " --out " +
                (dir / "t1").string() + " --threads 1") == 0);
  CHECK(run_cli("dsmc --config " + cfgf.string() + " --out " +
                (dir / "t4").string() + " --threads 4") == 0);
  CHECK(read_file(dir / "t1" / "profile_t1.csv") ==
        read_file(dir / "t4" / "profile_t1.csv"));
  CHECK(read_file(dir / "t1" / "diagnostics.csv") ==
        read_file(dir / "t4" / "diagnostics.csv"));

  // --seed overrides the config value and changes the sample noise.
  CHECK(run_cli("dsmc --config " + cfgf.string() + " --out " +
                (dir / "s9").string() + " --seed 9") == 0);
  CHECK(read_file(dir / "t1" / "profile_t1.csv") !=
        read_file(dir / "s9" / "profile_t1.csv"));
}
