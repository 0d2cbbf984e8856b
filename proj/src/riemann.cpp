#include "kingas/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace kingas {

namespace {

struct SideData {
  double rho, u, p, a;
};

SideData side_data(const GasState& s, const GasModel& gm) {
  return {s.rho, s.u, s.pressure(gm), s.sound_speed(gm)};
}

// Toro's pressure function f_K(p) and its derivative for one side.
void pressure_fn(double p, const SideData& k, double g, double& f, double& df) {
  if (p > k.p) {  // shock
    const double A = 2.0 / ((g + 1.0) * k.rho);
    const double B = (g - 1.0) / (g + 1.0) * k.p;
    const double q = std::sqrt(A / (p + B));
    f = (p - k.p) * q;
    df = q * (1.0 - 0.5 * (p - k.p) / (B + p));
  } else {  // rarefaction
    const double pr = p / k.p;
    f = 2.0 * k.a / (g - 1.0) * (std::pow(pr, (g - 1.0) / (2.0 * g)) - 1.0);
    df = std::pow(pr, -(g + 1.0) / (2.0 * g)) / (k.rho * k.a);
  }
}

}  // namespace

GasState rankine_hugoniot(double Ma1, const GasState& upstream,
                          const GasModel& gm) {
  if (!(Ma1 >= 1.0))
    throw std::domain_error("rankine_hugoniot: Ma1 must be >= 1");
  const double M2 = Ma1 * Ma1;
  const double u1 = Ma1 * std::sqrt(gm.gamma * gm.R * upstream.T);
  GasState d;
  d.u = u1 * (M2 + 3.0) / (4.0 * M2);
  d.T = upstream.T * (5.0 * M2 - 1.0) * (M2 + 3.0) / (16.0 * M2);
  d.rho = upstream.rho * 4.0 * M2 / (M2 + 3.0);
  return d;
}

DiscontinuityIC make_shock_ic(double Ma1, const GasState& upstream,
                              const GasModel& gm) {
  DiscontinuityIC ic;
  ic.kind = IcKind::Shock;
  ic.left = upstream;
  ic.left.u = Ma1 * std::sqrt(gm.gamma * gm.R * upstream.T);
  ic.right = rankine_hugoniot(Ma1, upstream, gm);
  return ic;
}

double mach_from_temperature_ratio(double T_ratio) {
  if (!(T_ratio > 1.0))
    throw std::domain_error("mach_from_temperature_ratio: T_ratio must be > 1");
  // (5 Ma^2 - 1)(Ma^2 + 3) = 16 r Ma^2 is quadratic in z = Ma^2:
  // 5 z^2 + (14 - 16 r) z - 3 = 0.
  const double b = 14.0 - 16.0 * T_ratio;
  const double z = (-b + std::sqrt(b * b + 60.0)) / 10.0;
  return std::sqrt(z);
}

RiemannFan exact_riemann(const GasState& left, const GasState& right,
                         const GasModel& gm) {
  const double g = gm.gamma;
  const SideData L = side_data(left, gm);
  const SideData R = side_data(right, gm);
  const double du = R.u - L.u;
  if (!(du < 2.0 * (L.a + R.a) / (g - 1.0)))
    throw std::domain_error("exact_riemann: vacuum generation");

  // Two-rarefaction initial guess.
  const double z = (g - 1.0) / (2.0 * g);
  double p = std::pow(
      (L.a + R.a - 0.5 * (g - 1.0) * du) /
          (L.a / std::pow(L.p, z) + R.a / std::pow(R.p, z)),
      1.0 / z);
  p = std::max(p, 1e-12 * std::min(L.p, R.p));

  double lo = 1e-14 * std::min(L.p, R.p);
  double hi = 100.0 * std::max(L.p, R.p);
  // Expand hi until the pressure function is positive there.
  auto total = [&](double pp) {
    double fl, dfl, fr, dfr;
    pressure_fn(pp, L, g, fl, dfl);
    pressure_fn(pp, R, g, fr, dfr);
    return std::pair<double, double>(fl + fr + du, dfl + dfr);
  };
  for (int i = 0; i < 200 && total(hi).first < 0.0; ++i) hi *= 10.0;

  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    auto [f, df] = total(p);
    if (f > 0.0) hi = std::min(hi, p);
    else lo = std::max(lo, p);
    const double step = f / df;
    double pn = p - step;
    if (!(pn > lo) || !(pn < hi)) pn = 0.5 * (lo + hi);
    if (std::abs(pn - p) <= 1e-13 * pn) {
      p = pn;
      converged = true;
      break;
    }
    p = pn;
  }
  if (!converged)
    throw std::runtime_error("exact_riemann: star pressure iteration stalled");

  double fl, dfl, fr, dfr;
  pressure_fn(p, L, g, fl, dfl);
  pressure_fn(p, R, g, fr, dfr);

  RiemannFan fan;
  fan.p_star = p;
  fan.u_star = 0.5 * (L.u + R.u) + 0.5 * (fr - fl);
  fan.left_wave = p > L.p ? WaveKind::Shock : WaveKind::Rarefaction;
  fan.right_wave = p > R.p ? WaveKind::Shock : WaveKind::Rarefaction;
  fan.left = left;
  fan.right = right;
  fan.gamma = g;
  return fan;
}

GasState RiemannFan::sample(const GasModel& gm, double xi) const {
  const double g = gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  const SideData L = side_data(left, gm);
  const SideData R = side_data(right, gm);
  auto from_rho_p = [&](double rho, double u, double p) {
    return GasState{rho, u, p / (rho * gm.R)};
  };

  if (xi <= u_star) {  // left of the contact
    const double pr = p_star / L.p;
    if (left_wave == WaveKind::Shock) {
      const double S = L.u - L.a * std::sqrt((g + 1.0) / (2.0 * g) * pr +
                                             (g - 1.0) / (2.0 * g));
      if (xi <= S) return left;
      const double rho = L.rho * (pr + mu2) / (mu2 * pr + 1.0);
      return from_rho_p(rho, u_star, p_star);
    }
    const double a_star = L.a * std::pow(pr, (g - 1.0) / (2.0 * g));
    if (xi <= L.u - L.a) return left;
    if (xi >= u_star - a_star)
      return from_rho_p(L.rho * std::pow(pr, 1.0 / g), u_star, p_star);
    // inside the left fan
    const double a = (2.0 * L.a + (g - 1.0) * (L.u - xi)) / (g + 1.0);
    const double u = xi + a;
    const double rho = L.rho * std::pow(a / L.a, 2.0 / (g - 1.0));
    return from_rho_p(rho, u, L.p * std::pow(a / L.a, 2.0 * g / (g - 1.0)));
  }

  const double pr = p_star / R.p;
  if (right_wave == WaveKind::Shock) {
    const double S = R.u + R.a * std::sqrt((g + 1.0) / (2.0 * g) * pr +
                                           (g - 1.0) / (2.0 * g));
    if (xi >= S) return right;
    const double rho = R.rho * (pr + mu2) / (mu2 * pr + 1.0);
    return from_rho_p(rho, u_star, p_star);
  }
  const double a_star = R.a * std::pow(pr, (g - 1.0) / (2.0 * g));
  if (xi >= R.u + R.a) return right;
  if (xi <= u_star + a_star)
    return from_rho_p(R.rho * std::pow(pr, 1.0 / g), u_star, p_star);
  const double a = (2.0 * R.a - (g - 1.0) * (R.u - xi)) / (g + 1.0);
  const double u = xi - a;
  const double rho = R.rho * std::pow(a / R.a, 2.0 / (g - 1.0));
  return from_rho_p(rho, u, R.p * std::pow(a / R.a, 2.0 * g / (g - 1.0)));
}

FluxVector godunov_flux(const GasState& left, const GasState& right,
                        const GasModel& gm) {
  const RiemannFan fan = exact_riemann(left, right, gm);
  return euler_flux(fan.sample(gm, 0.0), gm);
}

namespace {

// Largest shock compression in a fan: rho_star_side / rho_side.
double shock_ratio(const RiemannFan& fan, const GasModel& gm) {
  const double g = fan.gamma;
  const double mu2 = (g - 1.0) / (g + 1.0);
  double r = 1.0;
  if (fan.left_wave == WaveKind::Shock) {
    const double pr = fan.p_star / fan.left.pressure(gm);
    r = std::max(r, (pr + mu2) / (mu2 * pr + 1.0));
  }
  if (fan.right_wave == WaveKind::Shock) {
    const double pr = fan.p_star / fan.right.pressure(gm);
    r = std::max(r, (pr + mu2) / (mu2 * pr + 1.0));
  }
  return r;
}

bool same_state(const GasState& a, const GasState& b) {
  return std::abs(a.rho - b.rho) <= 1e-12 * a.rho &&
         std::abs(a.u - b.u) <= 1e-12 * (std::abs(a.u) + std::abs(b.u)) + 1e-300 &&
         std::abs(a.T - b.T) <= 1e-12 * a.T;
}

}  // namespace

TwoShockReport two_shock_split(const GasState& upstream,
                               const ConservedState& mid,
                               const GasState& downstream, const GasModel& gm) {
  const GasState wm = primitive_from_conserved(mid, gm);
  const RiemannFan f1 = exact_riemann(upstream, wm, gm);
  const RiemannFan f2 = exact_riemann(wm, downstream, gm);
  TwoShockReport rep;
  const bool d1 = same_state(upstream, wm);
  const bool d2 = same_state(wm, downstream);
  rep.first_left = d1 ? WaveKind::None : f1.left_wave;
  rep.first_right = d1 ? WaveKind::None : f1.right_wave;
  rep.second_left = d2 ? WaveKind::None : f2.left_wave;
  rep.second_right = d2 ? WaveKind::None : f2.right_wave;
  rep.first_ratio = d1 ? 1.0 : shock_ratio(f1, gm);
  rep.second_ratio = d2 ? 1.0 : shock_ratio(f2, gm);
  rep.combined_ratio = rep.first_ratio * rep.second_ratio;
  return rep;
}

}  // namespace kingas
