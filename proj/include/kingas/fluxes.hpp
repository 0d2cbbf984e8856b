#ifndef KINGAS_FLUXES_HPP
#define KINGAS_FLUXES_HPP

#include "kingas/gas.hpp"

namespace kingas {

struct GksParams {
  double c_jump = 1.0;  // pressure-jump dissipation coefficient
};

/// Collisionless kinetic flux vector splitting: positive half-moment fluxes
/// of the left Maxwellian plus negative half-moment fluxes of the right one.
FluxVector kfvs_flux(const GasState& left, const GasState& right,
                     const GasModel& gm);

/// Equilibrium state formed at the interface by the colliding half
/// distributions (conserved moments of f_left for c>0 plus f_right for c<0).
GasState interface_equilibrium(const GasState& left, const GasState& right,
                               const GasModel& gm);

/// Interface relaxation time: mu(T0)/p0 plus the pressure-jump enhancement
/// C_jump * dt * |p_l - p_r| / (p_l + p_r).
double collision_time(const GasState& w0, double p_left, double p_right,
                      double dt, const GksParams& params, const GasModel& gm);

/// Time-averaged free-transport weight alpha = (tau/dt)(1 - exp(-dt/tau));
/// alpha -> 1 collisionless, alpha -> 0 equilibrium.
double free_transport_weight(double tau, double dt);

/// Relaxation-weighted gas-kinetic flux:
/// alpha * kfvs + (1 - alpha) * euler_flux(interface equilibrium).
FluxVector gks_flux(const GasState& left, const GasState& right, double dt,
                    const GksParams& params, const GasModel& gm);

}  // namespace kingas

#endif
