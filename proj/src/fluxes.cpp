#include "kingas/fluxes.hpp"

#include <cmath>

namespace kingas {

namespace {

// Mass, momentum, and energy fluxes carried by one half distribution.
// Transverse thermal motion and gamma-implied internal modes ride along with
// the x-directed number flux: energy per molecule = c^2/2 + (2+K)/2 RT.
FluxVector half_flux(const Maxwellian& mx, Side side, double T,
                     const GasModel& gm) {
  const double K = gm.internal_dof();
  const double m1 = half_moment(mx, side, 1);
  const double m2 = half_moment(mx, side, 2);
  const double m3 = half_moment(mx, side, 3);
  FluxVector f;
  f.mass = gm.m * m1;
  f.momentum = gm.m * m2;
  f.energy = gm.m * (0.5 * m3 + 0.5 * (2.0 + K) * gm.R * T * m1);
  return f;
}

}  // namespace

FluxVector kfvs_flux(const GasState& left, const GasState& right,
                     const GasModel& gm) {
  const Maxwellian ml = maxwellian_from_state(left, gm);
  const Maxwellian mr = maxwellian_from_state(right, gm);
  return half_flux(ml, Side::Right, left.T, gm) +
         half_flux(mr, Side::Left, right.T, gm);
}

GasState interface_equilibrium(const GasState& left, const GasState& right,
                               const GasModel& gm) {
  const Maxwellian ml = maxwellian_from_state(left, gm);
  const Maxwellian mr = maxwellian_from_state(right, gm);
  const double K = gm.internal_dof();
  ConservedState w0;
  w0.rho = gm.m * (half_moment(ml, Side::Right, 0) +
                   half_moment(mr, Side::Left, 0));
  w0.mom = gm.m * (half_moment(ml, Side::Right, 1) +
                   half_moment(mr, Side::Left, 1));
  w0.E = gm.m *
         (0.5 * half_moment(ml, Side::Right, 2) +
          0.5 * (2.0 + K) * gm.R * left.T * half_moment(ml, Side::Right, 0) +
          0.5 * half_moment(mr, Side::Left, 2) +
          0.5 * (2.0 + K) * gm.R * right.T * half_moment(mr, Side::Left, 0));
  return primitive_from_conserved(w0, gm);
}

double collision_time(const GasState& w0, double p_left, double p_right,
                      double dt, const GksParams& params, const GasModel& gm) {
  if (!(dt > 0.0)) throw std::domain_error("collision_time: dt must be > 0");
  const double p0 = w0.pressure(gm);
  return gm.viscosity(w0.T) / p0 +
         params.c_jump * dt * std::abs(p_left - p_right) / (p_left + p_right);
}

double free_transport_weight(double tau, double dt) {
  const double r = tau / dt;
  if (r > 1e15) return 1.0;
  if (r < 1e-18) return 0.0;
  return r * (1.0 - std::exp(-1.0 / r));
}

FluxVector gks_flux(const GasState& left, const GasState& right, double dt,
                    const GksParams& params, const GasModel& gm) {
  const GasState w0 = interface_equilibrium(left, right, gm);
  const double tau = collision_time(w0, left.pressure(gm), right.pressure(gm),
                                    dt, params, gm);
  const double alpha = free_transport_weight(tau, dt);
  return alpha * kfvs_flux(left, right, gm) +
         (1.0 - alpha) * euler_flux(w0, gm);
}

}  // namespace kingas
