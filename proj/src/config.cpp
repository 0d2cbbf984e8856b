#include "kingas/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace kingas {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct RawEntry {
  std::string value;
  int line;
};

[[noreturn]] void fail(const std::string& key, int line, const std::string& msg) {
  throw ConfigError("config key '" + key + "' (line " + std::to_string(line) +
                    "): " + msg);
}

class Entries {
public:
  void insert(const std::string& key, const std::string& value, int line) {
    if (map_.count(key)) fail(key, line, "duplicate key");
    map_[key] = {value, line};
  }

  bool has(const std::string& key) const { return map_.count(key) != 0; }

  std::string take_string(const std::string& key, const std::string& def) {
    auto it = map_.find(key);
    if (it == map_.end()) return def;
    used_.insert(it->first);
    return trim(it->second.value);
  }

  double take_double(const std::string& key, double def) {
    auto it = map_.find(key);
    if (it == map_.end()) return def;
    used_.insert(it->first);
    try {
      std::size_t pos = 0;
      const std::string v = trim(it->second.value);
      const double x = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument("trailing characters");
      return x;
    } catch (const std::exception&) {
      fail(key, it->second.line, "expected a number, got '" +
                                     trim(it->second.value) + "'");
    }
  }

  std::uint64_t take_uint(const std::string& key, std::uint64_t def) {
    const double x = take_double(key, static_cast<double>(def));
    if (x < 0.0 || x != std::floor(x))
      fail(key, line_of(key), "expected a non-negative integer");
    return static_cast<std::uint64_t>(x);
  }

  bool take_bool(const std::string& key, bool def) {
    auto it = map_.find(key);
    if (it == map_.end()) return def;
    used_.insert(it->first);
    const std::string v = trim(it->second.value);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(key, it->second.line, "expected a boolean");
  }

  std::vector<double> take_list(const std::string& key,
                                std::vector<double> def) {
    auto it = map_.find(key);
    if (it == map_.end()) return def;
    used_.insert(it->first);
    std::vector<double> out;
    std::stringstream ss(it->second.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        out.push_back(std::stod(item));
      } catch (const std::exception&) {
        fail(key, it->second.line, "bad list element '" + item + "'");
      }
    }
    return out;
  }

  int line_of(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? 0 : it->second.line;
  }

  void reject_unused() const {
    for (const auto& [k, e] : map_)
      if (!used_.count(k)) fail(k, e.line, "unknown key");
  }

private:
  std::map<std::string, RawEntry> map_;
  mutable std::set<std::string> used_;
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Entries e;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string path = section.empty() ? key : section + "." + key;
    e.insert(path, trim(line.substr(eq + 1)), lineno);
  }

  ExperimentConfig cfg;

  const std::string cs = e.take_string("case", "");
  if (cs == "contact") cfg.case_kind = CaseKind::Contact;
  else if (cs == "shock") cfg.case_kind = CaseKind::Shock;
  else if (cs == "sod") cfg.case_kind = CaseKind::Sod;
  else if (cs == "custom") cfg.case_kind = CaseKind::Custom;
  else if (cs.empty()) throw ConfigError("config: missing required key 'case'");
  else fail("case", e.line_of("case"), "must be contact|shock|sod|custom");

  const std::string rs = e.take_string("regime", "");
  if (rs == "freemol") cfg.regime = Regime::Freemol;
  else if (rs == "dsmc") cfg.regime = Regime::Dsmc;
  else if (rs == "fvm") cfg.regime = Regime::Fvm;
  else if (rs == "riemann") cfg.regime = Regime::Riemann;
  else if (rs.empty())
    throw ConfigError("config: missing required key 'regime'");
  else fail("regime", e.line_of("regime"), "must be freemol|dsmc|fvm|riemann");

  cfg.strength = e.take_double("strength", 0.0);
  cfg.mach = e.take_double("mach", 0.0);
  cfg.times = e.take_list("times", {1.0});
  cfg.seed = e.take_uint("seed", 1);
  cfg.out_dir = e.take_string("out", ".");
  cfg.ref_rho = e.take_double("rho1", cfg.ref_rho);
  cfg.ref_T = e.take_double("T1", cfg.ref_T);

  // Gas: argon defaults, nondimensional gamma=1.4 gas for Sod.
  if (cfg.case_kind == CaseKind::Sod) cfg.gas = GasModel::ideal(1.4);
  const GasModel base = cfg.gas;
  cfg.gas.R = e.take_double("gas.R", base.R);
  cfg.gas.gamma = e.take_double("gas.gamma", base.gamma);
  cfg.gas.m = e.take_double("gas.m", base.m);
  cfg.gas.d_ref = e.take_double("gas.d_ref", base.d_ref);
  cfg.gas.T_ref = e.take_double("gas.T_ref", base.T_ref);
  cfg.gas.omega = e.take_double("gas.omega", base.omega);
  cfg.gas.mu_ref = e.take_double("gas.mu_ref", base.mu_ref);

  cfg.fm_half_length_lambda =
      e.take_double("freemol.half_length_lambda", cfg.fm_half_length_lambda);
  cfg.fm_points_per_lambda =
      e.take_double("freemol.points_per_lambda", cfg.fm_points_per_lambda);

  cfg.dsmc_half_length_lambda =
      e.take_double("dsmc.half_length_lambda", cfg.dsmc_half_length_lambda);
  cfg.dsmc_cells_per_lambda =
      e.take_double("dsmc.cells_per_lambda", cfg.dsmc_cells_per_lambda);
  cfg.dsmc_particles_per_cell =
      e.take_double("dsmc.particles_per_cell", cfg.dsmc_particles_per_cell);
  cfg.dsmc_dt_tau = e.take_double("dsmc.dt_tau", cfg.dsmc_dt_tau);
  cfg.dsmc_sample_cells_per_lambda = e.take_double(
      "dsmc.sample_cells_per_lambda", cfg.dsmc_sample_cells_per_lambda);
  cfg.dsmc_replicas = e.take_uint("dsmc.replicas", cfg.dsmc_replicas);
  cfg.dsmc_collisions = e.take_bool("dsmc.collisions", cfg.dsmc_collisions);

  const std::string fs = e.take_string("fvm.scheme", "godunov");
  if (fs == "godunov") cfg.fvm_flux = FluxKind::Godunov;
  else if (fs == "kfvs") cfg.fvm_flux = FluxKind::Kfvs;
  else if (fs == "gks") cfg.fvm_flux = FluxKind::Gks;
  else fail("fvm.scheme", e.line_of("fvm.scheme"), "must be godunov|kfvs|gks");

  const std::string ls = e.take_string("fvm.limiter", "none");
  if (ls == "none") cfg.fvm_limiter = Limiter::None;
  else if (ls == "minmod") cfg.fvm_limiter = Limiter::Minmod;
  else if (ls == "vanleer") cfg.fvm_limiter = Limiter::VanLeer;
  else
    fail("fvm.limiter", e.line_of("fvm.limiter"), "must be none|minmod|vanleer");

  cfg.fvm_cfl = e.take_double("fvm.cfl", cfg.fvm_cfl);
  cfg.fvm_cells = e.take_uint("fvm.cells", cfg.fvm_cells);
  cfg.fvm_c_jump = e.take_double("fvm.c_jump", cfg.fvm_c_jump);
  cfg.fvm_domain_lambda =
      e.take_double("fvm.domain_lambda", cfg.fvm_domain_lambda);

  cfg.custom_left.rho = e.take_double("custom.rho_left", 1.0);
  cfg.custom_left.u = e.take_double("custom.u_left", 0.0);
  cfg.custom_left.T = e.take_double("custom.T_left", 1.0);
  cfg.custom_right.rho = e.take_double("custom.rho_right", 1.0);
  cfg.custom_right.u = e.take_double("custom.u_right", 0.0);
  cfg.custom_right.T = e.take_double("custom.T_right", 1.0);

  e.reject_unused();

  // Cross-field validation.
  if (cfg.case_kind == CaseKind::Contact) {
    if (!(cfg.strength > 0.0))
      throw ConfigError("config: contact case needs strength > 0 (T2/T1)");
  } else if (cfg.case_kind == CaseKind::Shock) {
    if (cfg.mach > 0.0) {
      if (!(cfg.mach > 1.0))
        throw ConfigError("config: shock case needs mach > 1");
    } else if (!(cfg.strength > 1.0)) {
      throw ConfigError(
          "config: shock case needs strength > 1 (equivalently Ma1 > 1)");
    }
  } else if (cfg.case_kind == CaseKind::Sod) {
    if (cfg.regime == Regime::Dsmc || cfg.regime == Regime::Freemol)
      throw ConfigError("config: sod case supports only fvm or riemann regime");
  }
  if (!(cfg.fvm_cfl > 0.0) || cfg.fvm_cfl > 0.9)
    throw ConfigError("config: fvm.cfl must lie in (0, 0.9]");
  if (cfg.times.empty())
    throw ConfigError("config: times must contain at least one entry");
  return cfg;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string render_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const char* cases[] = {"contact", "shock", "sod", "custom"};
  const char* regimes[] = {"freemol", "dsmc", "fvm", "riemann"};
  os << "case = " << cases[static_cast<int>(cfg.case_kind)] << "\n";
  os << "regime = " << regimes[static_cast<int>(cfg.regime)] << "\n";
  os << "strength = " << num(cfg.strength) << "\n";
  os << "mach = " << num(cfg.mach) << "\n";
  os << "times = ";
  for (std::size_t i = 0; i < cfg.times.size(); ++i)
    os << (i ? "," : "") << num(cfg.times[i]);
  os << "\n";
  os << "seed = " << cfg.seed << "\n";
  os << "out = " << cfg.out_dir << "\n";
  os << "rho1 = " << num(cfg.ref_rho) << "\n";
  os << "T1 = " << num(cfg.ref_T) << "\n";
  os << "[gas]\n";
  os << "R = " << num(cfg.gas.R) << "\n";
  os << "gamma = " << num(cfg.gas.gamma) << "\n";
  os << "m = " << num(cfg.gas.m) << "\n";
  os << "d_ref = " << num(cfg.gas.d_ref) << "\n";
  os << "T_ref = " << num(cfg.gas.T_ref) << "\n";
  os << "omega = " << num(cfg.gas.omega) << "\n";
  os << "mu_ref = " << num(cfg.gas.mu_ref) << "\n";
  os << "[freemol]\n";
  os << "half_length_lambda = " << num(cfg.fm_half_length_lambda) << "\n";
  os << "points_per_lambda = " << num(cfg.fm_points_per_lambda) << "\n";
  os << "[dsmc]\n";
  os << "half_length_lambda = " << num(cfg.dsmc_half_length_lambda) << "\n";
  os << "cells_per_lambda = " << num(cfg.dsmc_cells_per_lambda) << "\n";
  os << "particles_per_cell = " << num(cfg.dsmc_particles_per_cell) << "\n";
  os << "dt_tau = " << num(cfg.dsmc_dt_tau) << "\n";
  os << "sample_cells_per_lambda = " << num(cfg.dsmc_sample_cells_per_lambda)
     << "\n";
  os << "replicas = " << cfg.dsmc_replicas << "\n";
  os << "collisions = " << (cfg.dsmc_collisions ? "true" : "false") << "\n";
  os << "[fvm]\n";
  const char* fluxes[] = {"godunov", "kfvs", "gks"};
  const char* limiters[] = {"none", "minmod", "vanleer"};
  os << "scheme = " << fluxes[static_cast<int>(cfg.fvm_flux)] << "\n";
  os << "limiter = " << limiters[static_cast<int>(cfg.fvm_limiter)] << "\n";
  os << "cfl = " << num(cfg.fvm_cfl) << "\n";
  os << "cells = " << cfg.fvm_cells << "\n";
  os << "c_jump = " << num(cfg.fvm_c_jump) << "\n";
  os << "domain_lambda = " << num(cfg.fvm_domain_lambda) << "\n";
  os << "[custom]\n";
  os << "rho_left = " << num(cfg.custom_left.rho) << "\n";
  os << "u_left = " << num(cfg.custom_left.u) << "\n";
  os << "T_left = " << num(cfg.custom_left.T) << "\n";
  os << "rho_right = " << num(cfg.custom_right.rho) << "\n";
  os << "u_right = " << num(cfg.custom_right.u) << "\n";
  os << "T_right = " << num(cfg.custom_right.T) << "\n";
  return os.str();
}

}  // namespace kingas
