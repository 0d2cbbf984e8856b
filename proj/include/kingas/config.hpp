#ifndef KINGAS_CONFIG_HPP
#define KINGAS_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kingas/dsmc.hpp"
#include "kingas/fvm.hpp"
#include "kingas/gas.hpp"

namespace kingas {

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class CaseKind { Contact, Shock, Sod, Custom };
enum class Regime { Freemol, Dsmc, Fvm, Riemann };

/// Fully resolved experiment description. Parsed from flat key = value text
/// with [section] headers; unknown keys are rejected.
struct ExperimentConfig {
  CaseKind case_kind = CaseKind::Contact;
  Regime regime = Regime::Freemol;
  double strength = 0.0;        // T2/T1 across the discontinuity
  double mach = 0.0;            // alternative strength for shock cases
  std::vector<double> times;    // tau1 units (fvm sod: scheme time units)
  std::uint64_t seed = 1;
  std::string out_dir = ".";

  // Reference (left/upstream) state for contact and shock cases.
  double ref_rho = 6.63e-6;  // n1 = 1e20 m^-3 of argon
  double ref_T = 273.0;

  GasModel gas = GasModel::argon();
  bool gas_overridden = false;

  // freemol grid
  double fm_half_length_lambda = 15.0;
  double fm_points_per_lambda = 8.0;

  // dsmc
  double dsmc_half_length_lambda = 50.0;
  double dsmc_cells_per_lambda = 3.0;
  double dsmc_particles_per_cell = 100.0;
  double dsmc_dt_tau = 0.1;
  double dsmc_sample_cells_per_lambda = 0.0;
  std::size_t dsmc_replicas = 10;
  bool dsmc_collisions = true;

  // fvm
  FluxKind fvm_flux = FluxKind::Godunov;
  Limiter fvm_limiter = Limiter::None;
  double fvm_cfl = 0.5;
  std::size_t fvm_cells = 400;
  double fvm_c_jump = 1.0;
  double fvm_domain_lambda = 50.0;  // half-length for contact/shock cases

  // custom case states
  GasState custom_left{1.0, 0.0, 1.0};
  GasState custom_right{1.0, 0.0, 1.0};
};

/// Parses and validates config text. Throws ConfigError naming the key and
/// line on any problem.
ExperimentConfig parse_config(const std::string& text);

/// Serializes the fully resolved config in the same format (manifest body);
/// re-parsing the result reproduces the config.
std::string render_config(const ExperimentConfig& cfg);

}  // namespace kingas

#endif
