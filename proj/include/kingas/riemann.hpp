#ifndef KINGAS_RIEMANN_HPP
#define KINGAS_RIEMANN_HPP

#include <functional>

#include "kingas/freemol.hpp"
#include "kingas/gas.hpp"

namespace kingas {

enum class WaveKind { Shock, Rarefaction, None };

/// Solution of the Euler Riemann problem: star region plus a self-similar
/// sampler over xi = x/t.
struct RiemannFan {
  double p_star;
  double u_star;
  WaveKind left_wave;
  WaveKind right_wave;
  GasState left;
  GasState right;
  double gamma;

  /// State at similarity coordinate xi = x/t (including rarefaction fans).
  GasState sample(const GasModel& gm, double xi) const;
};

/// Downstream state of a steady monatomic shock from the upstream state and
/// shock Mach number, in the shock frame. Upstream velocity is set to
/// Ma1 * a1 regardless of upstream.u.
GasState rankine_hugoniot(double Ma1, const GasState& upstream,
                          const GasModel& gm);

/// Steady-shock IC (shock frame) for the free-molecular / DSMC studies.
DiscontinuityIC make_shock_ic(double Ma1, const GasState& upstream,
                              const GasModel& gm);

/// Unique Ma1 > 1 whose monatomic RH temperature ratio equals T_ratio.
double mach_from_temperature_ratio(double T_ratio);

RiemannFan exact_riemann(const GasState& left, const GasState& right,
                         const GasModel& gm);

/// Euler flux of the xi = 0 sample of the fan (Godunov / FDS flux).
FluxVector godunov_flux(const GasState& left, const GasState& right,
                        const GasModel& gm);

/// Wave content of the two sub-Riemann problems (upstream, mid) and
/// (mid, downstream) that a finite-volume cell straddling a shock creates.
struct TwoShockReport {
  WaveKind first_left, first_right;    // waves of (upstream, mid)
  WaveKind second_left, second_right;  // waves of (mid, downstream)
  double first_ratio;     // largest shock compression in problem 1
  double second_ratio;    // largest shock compression in problem 2
  double combined_ratio;  // product of the two
};

TwoShockReport two_shock_split(const GasState& upstream,
                               const ConservedState& mid,
                               const GasState& downstream, const GasModel& gm);

}  // namespace kingas

#endif
