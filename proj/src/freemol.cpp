#include "kingas/freemol.hpp"

#include <algorithm>

#include "kingas/quadrature.hpp"

namespace kingas {

namespace {
constexpr double kSqrtPi = 1.77245385090551602730;

void require_time(double t) {
  if (!(t > 0.0)) throw std::domain_error("free-molecular profile needs t > 0");
}
}  // namespace

DiscontinuityIC make_contact_ic(const GasState& left_ref, double T_ratio,
                                const GasModel& gm) {
  (void)gm;
  if (!(T_ratio > 0.0))
    throw std::domain_error("contact IC needs T_ratio > 0");
  DiscontinuityIC ic;
  ic.kind = IcKind::Contact;
  ic.left = {left_ref.rho, 0.0, left_ref.T};
  // Pressure equality: n2 = n1 T1/T2.
  ic.right = {left_ref.rho / T_ratio, 0.0, left_ref.T * T_ratio};
  return ic;
}

namespace freemol {

double distribution_eval(const DiscontinuityIC& ic, const GasModel& gm,
                         double c, double x, double t) {
  require_time(t);
  const Maxwellian ml = maxwellian_from_state(ic.left, gm);
  const Maxwellian mr = maxwellian_from_state(ic.right, gm);
  return (x - c * t < 0.0) ? ml.eval(c) : mr.eval(c);
}

PointState profile(const DiscontinuityIC& ic, const GasModel& gm, double x,
                   double t) {
  require_time(t);
  const double s = x / t;
  const GasState& L = ic.left;
  const GasState& R = ic.right;
  const double b1 = 1.0 / std::sqrt(2.0 * gm.R * L.T);
  const double b2 = 1.0 / std::sqrt(2.0 * gm.R * R.T);
  const double z1 = b1 * (s - L.u);
  const double z2 = b2 * (s - R.u);
  // Molecules with c > x/t at (x,t) originate from the left side.
  const double A1 = 0.5 * std::erfc(z1);
  const double A2 = 0.5 * (1.0 + std::erf(z2));
  const double G1 = std::exp(-z1 * z1) / (2.0 * kSqrtPi * b1);
  const double G2 = std::exp(-z2 * z2) / (2.0 * kSqrtPi * b2);

  PointState p;
  p.rho = L.rho * A1 + R.rho * A2;
  p.U = (L.rho * (L.u * A1 + G1) + R.rho * (R.u * A2 - G2)) / p.rho;
  p.Tn = (L.T * L.rho * A1 + R.T * R.rho * A2) / p.rho;
  const double c2 =
      (L.rho * ((L.u * L.u + gm.R * L.T) * A1 + (s + L.u) * G1) +
       R.rho * ((R.u * R.u + gm.R * R.T) * A2 - (s + R.u) * G2)) /
      p.rho;
  p.Tx = (c2 - p.U * p.U) / gm.R;
  return p;
}

PointState contact_profile(const DiscontinuityIC& ic, const GasModel& gm,
                           double x, double t) {
  if (ic.kind != IcKind::Contact)
    throw std::domain_error("contact_profile: IC kind is not contact");
  if (ic.left.u != 0.0 || ic.right.u != 0.0)
    throw std::domain_error("contact_profile: contact IC must be at rest");
  const double p1 = ic.left.pressure(gm);
  const double p2 = ic.right.pressure(gm);
  if (std::abs(p1 - p2) > 1e-10 * (p1 + p2))
    throw std::domain_error("contact_profile: pressure mismatch across IC");
  return profile(ic, gm, x, t);
}

PointState shock_profile(const DiscontinuityIC& ic, const GasModel& gm,
                         double x, double t) {
  if (ic.kind != IcKind::Shock)
    throw std::domain_error("shock_profile: IC kind is not shock");
  // Steady-shock Rankine-Hugoniot fluxes must match across the pair.
  const GasState& L = ic.left;
  const GasState& R = ic.right;
  const FluxVector fl = euler_flux(L, gm);
  const FluxVector fr = euler_flux(R, gm);
  const double scale = std::abs(fl.momentum) + std::abs(fr.momentum);
  if (std::abs(fl.mass - fr.mass) >
          1e-8 * (std::abs(fl.mass) + std::abs(fr.mass)) ||
      std::abs(fl.momentum - fr.momentum) > 1e-8 * scale ||
      std::abs(fl.energy - fr.energy) >
          1e-8 * (std::abs(fl.energy) + std::abs(fr.energy)))
    throw std::domain_error(
        "shock_profile: IC pair does not satisfy Rankine-Hugoniot");
  return profile(ic, gm, x, t);
}

PointState moment_oracle(const DiscontinuityIC& ic, const GasModel& gm,
                         double x, double t, double abs_tol) {
  require_time(t);
  const double s = x / t;
  const Maxwellian ml = maxwellian_from_state(ic.left, gm);
  const Maxwellian mr = maxwellian_from_state(ic.right, gm);

  // Side-resolved number-density moments by quadrature; the distribution is
  // the left Maxwellian for c > x/t and the right one for c < x/t, so the
  // integral splits at the discontinuity in velocity space.
  auto piece = [&](const Maxwellian& m, double lo, double hi, int k) {
    if (!(hi > lo)) return 0.0;
    const double tol = abs_tol * std::max(1.0, m.n * std::pow(1.0 / m.beta, k));
    return integrate(
        [&](double c) {
          double ck = 1.0;
          for (int i = 0; i < k; ++i) ck *= c;
          return ck * m.eval(c);
        },
        lo, hi, tol);
  };
  const double cut = 8.0;  // Maxwellian tails negligible past 8 thermal widths
  const double l_lo = std::max(s, ml.u - cut / ml.beta);
  const double l_hi = std::max(s, ml.u + cut / ml.beta);
  const double r_lo = std::min(s, mr.u - cut / mr.beta);
  const double r_hi = std::min(s, mr.u + cut / mr.beta);

  const double n1 = piece(ml, l_lo, l_hi, 0);
  const double n2 = piece(mr, r_lo, r_hi, 0);
  const double m1 = piece(ml, l_lo, l_hi, 1);
  const double m2 = piece(mr, r_lo, r_hi, 1);
  const double e1 = piece(ml, l_lo, l_hi, 2);
  const double e2 = piece(mr, r_lo, r_hi, 2);

  const double n = n1 + n2;
  PointState p;
  p.rho = gm.m * n;
  p.U = (m1 + m2) / n;
  p.Tx = ((e1 + e2) / n - p.U * p.U) / gm.R;
  // Transverse components are untouched Maxwellians of the origin side.
  p.Tn = (n1 * ic.left.T + n2 * ic.right.T) / n;
  return p;
}

}  // namespace freemol

}  // namespace kingas
