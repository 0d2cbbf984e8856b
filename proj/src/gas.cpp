#include "kingas/gas.hpp"

namespace kingas {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;
}  // namespace

GasModel GasModel::argon() {
  GasModel gm;
  gm.R = 208.13;
  gm.gamma = 5.0 / 3.0;
  gm.m = 6.63e-26;
  gm.d_ref = 4.17e-10;
  gm.T_ref = 273.0;
  gm.omega = 0.81;
  // VHS reference viscosity consistent with (d_ref, T_ref, omega):
  // mu_ref = 15 sqrt(pi m k T_ref) / (2 pi d_ref^2 (5-2w)(7-2w)), k = m R.
  const double k_b = gm.m * gm.R;
  gm.mu_ref = 15.0 * std::sqrt(kPi * gm.m * k_b * gm.T_ref) /
              (2.0 * kPi * gm.d_ref * gm.d_ref * (5.0 - 2.0 * gm.omega) *
               (7.0 - 2.0 * gm.omega));
  return gm;
}

GasModel GasModel::ideal(double gamma) {
  GasModel gm;
  gm.R = 1.0;
  gm.gamma = gamma;
  gm.m = 1.0;
  gm.d_ref = 1.0;
  gm.T_ref = 1.0;
  gm.omega = 0.5;  // hard sphere
  // Small but nonzero scheme-unit viscosity. An exactly inviscid gas would
  // drive the gks relaxation time to zero wherever pressure is continuous,
  // leaving a pure central flux across contacts.
  gm.mu_ref = 1e-3;
  return gm;
}

Maxwellian maxwellian_from_state(const GasState& s, const GasModel& gm) {
  Maxwellian mx;
  mx.n = s.rho / gm.m;
  mx.u = s.u;
  mx.beta = 1.0 / std::sqrt(2.0 * gm.R * s.T);
  return mx;
}

ConservedState moments_full(const Maxwellian& mx, const GasModel& gm) {
  const double rho = mx.n * gm.m;
  const double T = mx.temperature(gm);
  ConservedState w;
  w.rho = rho;
  w.mom = rho * mx.u;
  w.E = 0.5 * rho * mx.u * mx.u + rho * gm.R * T / (gm.gamma - 1.0);
  return w;
}

double full_moment(const Maxwellian& mx, int order) {
  const double u = mx.u;
  const double th = 0.5 / (mx.beta * mx.beta);  // = RT
  switch (order) {
    case 0: return mx.n;
    case 1: return mx.n * u;
    case 2: return mx.n * (u * u + th);
    case 3: return mx.n * (u * u * u + 3.0 * u * th);
    default: throw std::domain_error("full_moment: order must be 0..3");
  }
}

double half_moment(const Maxwellian& mx, Side side, int order) {
  if (order < 0 || order > 3)
    throw std::domain_error("half_moment: order must be 0..3");
  const double u = mx.u;
  const double b = mx.beta;
  const double th = 0.5 / (b * b);
  // Right half: A = erfc(-beta u)/2, G = exp(-(beta u)^2)/(2 sqrt(pi) beta).
  const double A = 0.5 * std::erfc(-b * u);
  const double G = std::exp(-b * u * b * u) / (2.0 * kSqrtPi * b);
  double right;
  switch (order) {
    case 0: right = mx.n * A; break;
    case 1: right = mx.n * (u * A + G); break;
    case 2: right = mx.n * ((u * u + th) * A + u * G); break;
    default:
      right = mx.n * ((u * u * u + 3.0 * u * th) * A + (u * u + 2.0 * th) * G);
      break;
  }
  if (side == Side::Right) return right;
  return full_moment(mx, order) - right;
}

GasState primitive_from_conserved(const ConservedState& w, const GasModel& gm) {
  if (!(w.rho > 0.0))
    throw PositivityError("primitive_from_conserved: non-positive density rho=" +
                          std::to_string(w.rho));
  const double u = w.mom / w.rho;
  const double e_int = w.E - 0.5 * w.mom * w.mom / w.rho;
  if (!(e_int > 0.0))
    throw PositivityError(
        "primitive_from_conserved: non-positive internal energy e_int=" +
        std::to_string(e_int));
  GasState s;
  s.rho = w.rho;
  s.u = u;
  s.T = e_int * (gm.gamma - 1.0) / (w.rho * gm.R);
  return s;
}

ConservedState conserved_from_primitive(const GasState& s, const GasModel& gm) {
  ConservedState w;
  w.rho = s.rho;
  w.mom = s.rho * s.u;
  w.E = 0.5 * s.rho * s.u * s.u + s.rho * gm.R * s.T / (gm.gamma - 1.0);
  return w;
}

FluxVector euler_flux(const GasState& s, const GasModel& gm) {
  const double p = s.pressure(gm);
  const ConservedState w = conserved_from_primitive(s, gm);
  return {w.mom, w.mom * s.u + p, s.u * (w.E + p)};
}

double mean_thermal_speed(const GasState& s, const GasModel& gm) {
  return std::sqrt(8.0 * gm.R * s.T / kPi);
}

double mean_free_path(const GasState& s, const GasModel& gm) {
  const double n = s.rho / gm.m;
  return 1.0 / (std::sqrt(2.0) * gm.vhs_sigma(s.T) * n);
}

double mean_collision_time(const GasState& s, const GasModel& gm) {
  return mean_free_path(s, gm) / mean_thermal_speed(s, gm);
}

}  // namespace kingas
