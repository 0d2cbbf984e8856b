#ifndef KINGAS_FREEMOL_HPP
#define KINGAS_FREEMOL_HPP

#include "kingas/gas.hpp"

namespace kingas {

enum class IcKind { Contact, Shock, Generic };

/// Two-sided Maxwellian initial condition with a jump at x = 0.
struct DiscontinuityIC {
  GasState left;
  GasState right;
  IcKind kind = IcKind::Generic;
};

/// Pointwise macroscopic state with split translational temperatures.
struct PointState {
  double rho;
  double U;
  double Tn;  // normal to the propagation direction
  double Tx;  // parallel (x) component
};

/// Stationary contact: zero velocity, equal pressure, T_right/T_left = T_ratio.
DiscontinuityIC make_contact_ic(const GasState& left_ref, double T_ratio,
                                const GasModel& gm);

namespace freemol {

/// Collisionless evolution of the initial two-sided Maxwellian:
/// f(c,x,t) = f_left(c) for x - c t < 0, f_right(c) otherwise.
double distribution_eval(const DiscontinuityIC& ic, const GasModel& gm,
                         double c, double x, double t);

/// Closed-form moments of the free-molecular distribution at (x, t).
/// Valid for any two-sided Maxwellian IC; self-similar in x/t.
PointState profile(const DiscontinuityIC& ic, const GasModel& gm, double x,
                   double t);

/// profile() restricted to contact ICs (validates kind and the
/// zero-velocity / pressure-equality invariants).
PointState contact_profile(const DiscontinuityIC& ic, const GasModel& gm,
                           double x, double t);

/// profile() restricted to shock ICs (validates the Rankine-Hugoniot
/// invariant of the pair).
PointState shock_profile(const DiscontinuityIC& ic, const GasModel& gm,
                         double x, double t);

/// Independent ground truth: adaptive quadrature of moments of the
/// free-molecular distribution, with no use of the closed forms above.
PointState moment_oracle(const DiscontinuityIC& ic, const GasModel& gm,
                         double x, double t, double abs_tol = 1e-12);

}  // namespace freemol

}  // namespace kingas

#endif
