#ifndef KINGAS_GAS_HPP
#define KINGAS_GAS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace kingas {

/// Thrown when a state update would produce non-positive density,
/// temperature, or internal energy. `what()` names the failing field.
class PositivityError : public std::runtime_error {
public:
  explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Molecular model of a simple gas: ideal-gas constants plus the VHS
/// (variable hard sphere) collision parameters.
struct GasModel {
  double R;       // specific gas constant [J/(kg K)]
  double gamma;   // heat-capacity ratio
  double m;       // molecular mass [kg]
  double d_ref;   // VHS reference diameter [m]
  double T_ref;   // VHS reference temperature [K]
  double omega;   // VHS viscosity-temperature exponent
  double mu_ref;  // reference viscosity at T_ref [Pa s]

  // Internal degrees of freedom implied by gamma (0 for monatomic).
  double internal_dof() const { return (5.0 - 3.0 * gamma) / (gamma - 1.0); }

  // VHS viscosity law mu(T) = mu_ref (T/T_ref)^omega.
  double viscosity(double T) const {
    return mu_ref * std::pow(T / T_ref, omega);
  }

  // Effective VHS total cross section at temperature T,
  // sigma(T) = pi d_ref^2 (T_ref/T)^(omega-1/2), so that the
  // equilibrium mean free path is 1/(sqrt(2) sigma n).
  double vhs_sigma(double T) const {
    const double pi = 3.14159265358979323846;
    return pi * d_ref * d_ref * std::pow(T_ref / T, omega - 0.5);
  }

  static GasModel argon();
  // Nondimensional ideal gas (R = m = 1) for shock-tube style problems.
  static GasModel ideal(double gamma);
};

/// Primitive macroscopic state (density, velocity, temperature).
struct GasState {
  double rho;  // [kg/m^3]
  double u;    // [m/s]
  double T;    // [K]

  double pressure(const GasModel& gm) const { return rho * gm.R * T; }
  double sound_speed(const GasModel& gm) const {
    return std::sqrt(gm.gamma * gm.R * T);
  }
};

/// One-dimensional equilibrium distribution
/// f(c) = n (beta/sqrt(pi)) exp(-beta^2 (c-u)^2), beta = 1/sqrt(2RT).
struct Maxwellian {
  double n;     // number density [1/m^3]
  double u;     // mean velocity [m/s]
  double beta;  // inverse most-probable speed [s/m]

  double eval(double c) const {
    const double inv_sqrt_pi = 0.56418958354775628695;
    const double d = beta * (c - u);
    return n * beta * inv_sqrt_pi * std::exp(-d * d);
  }
  double temperature(const GasModel& gm) const {
    return 1.0 / (2.0 * gm.R * beta * beta);
  }
};

/// Conserved variables per unit volume.
struct ConservedState {
  double rho;  // mass
  double mom;  // momentum
  double E;    // total energy
};

struct FluxVector {
  double mass;
  double momentum;
  double energy;
};

inline FluxVector operator+(FluxVector a, FluxVector b) {
  return {a.mass + b.mass, a.momentum + b.momentum, a.energy + b.energy};
}
inline FluxVector operator-(FluxVector a, FluxVector b) {
  return {a.mass - b.mass, a.momentum - b.momentum, a.energy - b.energy};
}
inline FluxVector operator*(double s, FluxVector f) {
  return {s * f.mass, s * f.momentum, s * f.energy};
}

enum class Side { Left, Right };

Maxwellian maxwellian_from_state(const GasState& s, const GasModel& gm);
ConservedState moments_full(const Maxwellian& mx, const GasModel& gm);

/// Half-space velocity moment of a 1D Maxwellian:
///   side=Right: integral over c > 0 of c^k f(c) dc
///   side=Left:  integral over c < 0 of c^k f(c) dc
/// for k in {0,1,2,3}, in closed form (erfc + Gaussian terms).
double half_moment(const Maxwellian& mx, Side side, int order);

/// Full k-th moment, k in {0,1,2,3}.
double full_moment(const Maxwellian& mx, int order);

GasState primitive_from_conserved(const ConservedState& w, const GasModel& gm);
ConservedState conserved_from_primitive(const GasState& s, const GasModel& gm);

/// Analytic Euler flux of a single state: {rho u, rho u^2 + p, u (E + p)}.
FluxVector euler_flux(const GasState& s, const GasModel& gm);

// Kinetic normalization scales of a reference state: VHS mean free path
// lambda = 1/(sqrt(2) sigma(T) n) and mean collision time lambda/cbar.
double mean_free_path(const GasState& s, const GasModel& gm);
double mean_collision_time(const GasState& s, const GasModel& gm);
double mean_thermal_speed(const GasState& s, const GasModel& gm);

}  // namespace kingas

#endif
