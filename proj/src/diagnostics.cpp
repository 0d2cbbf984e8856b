#include "kingas/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kingas {

namespace {

bool valid(double v) { return std::isfinite(v); }

struct Crossing {
  double x;
  std::size_t seg;  // segment index i: crossing lies in [x[i], x[i+1]]
};

// All linear-interpolated crossings of level in a (possibly noisy) field.
std::vector<Crossing> crossings(const std::vector<double>& x,
                                const std::vector<double>& f, double level) {
  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (!valid(f[i]) || !valid(f[i + 1])) continue;
    const double a = f[i] - level, b = f[i + 1] - level;
    if (a == 0.0) out.push_back({x[i], i});
    else if (a * b < 0.0)
      out.push_back({x[i] + (x[i + 1] - x[i]) * a / (a - b), i});
  }
  return out;
}

}  // namespace

std::vector<double> normalized_density(const Profile& p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < p.rho.size(); ++i)
    if (valid(p.rho[i])) idx.push_back(i);
  if (idx.size() < 10)
    throw DiagnosticError("normalized_density: too few valid cells");
  const std::size_t k = std::max<std::size_t>(1, idx.size() / 10);
  double left = 0.0, right = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    left += p.rho[idx[i]];
    right += p.rho[idx[idx.size() - 1 - i]];
  }
  left /= static_cast<double>(k);
  right /= static_cast<double>(k);
  const double lo = std::min(left, right), hi = std::max(left, right);
  if (!(hi - lo > 1e-12 * hi))
    throw DiagnosticError("normalized_density: far-field densities equal");
  std::vector<double> out(p.rho.size(),
                          std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i : idx) out[i] = (p.rho[i] - lo) / (hi - lo);
  return out;
}

double thickness(const Profile& p) {
  const std::vector<double> rs = normalized_density(p);
  const auto half = crossings(p.x, rs, 0.5);
  if (half.empty())
    throw DiagnosticError("thickness: no rho*=0.5 crossing (degenerate profile)");
  const Crossing center = half[half.size() / 2];

  // Which side of the center is the high-density side?
  double left_plateau = std::numeric_limits<double>::quiet_NaN();
  for (double v : rs)
    if (valid(v)) { left_plateau = v; break; }
  const bool high_on_left = left_plateau > 0.5;

  auto nearest = [&](double level, bool to_left) -> double {
    const auto c = crossings(p.x, rs, level);
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& cr : c) {
      if (to_left ? cr.x <= center.x : cr.x >= center.x) {
        if (!valid(best) || std::abs(cr.x - center.x) < std::abs(best - center.x))
          best = cr.x;
      }
    }
    return best;
  };
  const double x_high = nearest(0.8, high_on_left);
  const double x_low = nearest(0.2, !high_on_left);
  if (!valid(x_high) || !valid(x_low))
    throw DiagnosticError("thickness: 0.2/0.8 crossing missing on central segment");
  const double d = std::abs(x_low - x_high) / 0.6;

  if (half.size() > 1) {
    const double spread = half.back().x - half.front().x;
    if (spread > std::abs(x_low - x_high)) {
      std::string msg = "thickness: ambiguous central crossings at x = {";
      for (const auto& cr : half) msg += " " + std::to_string(cr.x);
      throw DiagnosticError(msg + " }");
    }
  }
  return d;
}

OvershootReport overshoot(const Profile& p) {
  const std::vector<double> rs = normalized_density(p);
  double mx = -1e300, mn = 1e300;
  for (double v : rs)
    if (valid(v)) {
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
  return {std::max(0.0, mx - 1.0), std::max(0.0, -mn)};
}

ScalingFit scaling_exponent(const std::vector<std::pair<double, double>>& td) {
  if (td.size() < 5)
    throw DiagnosticError("scaling_exponent: need at least 5 points");
  const std::size_t n = td.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [t, d] : td) {
    if (!(t > 0.0) || !(d > 0.0))
      throw DiagnosticError("scaling_exponent: t and d must be positive");
    const double lx = std::log(t), ly = std::log(d);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  const double denom = sxx - sx * sx / dn;
  const double slope = (sxy - sx * sy / dn) / denom;
  const double intercept = (sy - slope * sx) / dn;
  double ss = 0.0;
  for (const auto& [t, d] : td) {
    const double r = std::log(d) - (intercept + slope * std::log(t));
    ss += r * r;
  }
  const double se =
      n > 2 ? std::sqrt(ss / (dn - 2.0) / denom) : 0.0;
  return {slope, se};
}

double l1_error(const Profile& p, const std::function<double(double)>& ref,
                const std::vector<double>& field) {
  if (field.size() != p.x.size())
    throw DiagnosticError("l1_error: field/grid size mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    if (!valid(field[i])) continue;
    const double xm = i == 0 ? p.x[0] : 0.5 * (p.x[i - 1] + p.x[i]);
    const double xp =
        i + 1 == p.x.size() ? p.x.back() : 0.5 * (p.x[i] + p.x[i + 1]);
    const double w = xp - xm;
    num += std::abs(field[i] - ref(p.x[i])) * w;
    den += w;
  }
  if (!(den > 0.0)) throw DiagnosticError("l1_error: empty profile");
  return num / den;
}

double total_temperature(double Tx, double Tn) {
  if (!(Tx > 0.0) || !(Tn > 0.0))
    throw DiagnosticError("total_temperature: temperatures must be positive");
  return (Tx + 2.0 * Tn) / 3.0;
}

}  // namespace kingas
