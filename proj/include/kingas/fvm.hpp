#ifndef KINGAS_FVM_HPP
#define KINGAS_FVM_HPP

#include <functional>
#include <vector>

#include "kingas/diagnostics.hpp"
#include "kingas/fluxes.hpp"
#include "kingas/gas.hpp"

namespace kingas {

enum class FluxKind { Godunov, Kfvs, Gks };
enum class Limiter { None, Minmod, VanLeer };
enum class BoundaryType { FixedState, ZeroGradient };

struct Boundary {
  BoundaryType type = BoundaryType::ZeroGradient;
  GasState state{1.0, 0.0, 1.0};  // used when type == FixedState
};

struct Grid1D {
  std::size_t n = 0;
  double x_min = 0.0, x_max = 0.0;
  std::vector<ConservedState> cells;
  Boundary left, right;

  double dx() const { return (x_max - x_min) / static_cast<double>(n); }
  double center(std::size_t i) const {
    return x_min + (static_cast<double>(i) + 0.5) * dx();
  }
};

struct SchemeConfig {
  FluxKind flux = FluxKind::Godunov;
  Limiter limiter = Limiter::None;
  double cfl = 0.5;
  GksParams gks;
};

/// One (left, right) state pair per interface, boundary interfaces included.
using InterfaceStates = std::vector<std::pair<GasState, GasState>>;

Grid1D make_grid(std::size_t n, double x_min, double x_max,
                 const std::function<GasState(double)>& init, Boundary left,
                 Boundary right, const GasModel& gm);

InterfaceStates reconstruct(const Grid1D& grid, Limiter limiter,
                            const GasModel& gm);

double cfl_dt(const Grid1D& grid, double cfl, const GasModel& gm);

/// Flux at every interface. The parallel flag selects the OpenMP sweep;
/// both paths produce identical results (pure per-interface flux functions).
std::vector<FluxVector> interface_fluxes(const InterfaceStates& states,
                                         const SchemeConfig& scheme, double dt,
                                         const GasModel& gm,
                                         bool parallel = true);

/// Advances the grid by one CFL-limited step (capped at dt_max if positive)
/// and returns the dt used. First-order forward Euler with piecewise-constant
/// reconstruction; two-stage Heun when a limiter is active.
double step(Grid1D& grid, const SchemeConfig& scheme, const GasModel& gm,
            double dt_max = 0.0, bool parallel = true);

Profile grid_profile(const Grid1D& grid, const GasModel& gm, double t,
                     const std::string& x_unit = "m",
                     const std::string& t_unit = "s");

/// Steps to t_end, emitting a profile at each requested time (and at t_end
/// if not already requested).
std::vector<Profile> run(Grid1D grid, const SchemeConfig& scheme,
                         const GasModel& gm,
                         const std::vector<double>& sample_times, double t_end,
                         bool parallel = true);

}  // namespace kingas

#endif
