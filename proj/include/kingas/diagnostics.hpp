#ifndef KINGAS_DIAGNOSTICS_HPP
#define KINGAS_DIAGNOSTICS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kingas {

class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class ProfileSource { Freemol, Dsmc, Fvm };

/// Sampled macroscopic fields on a spatial grid at one time. Cells with no
/// sample carry NaN ("missing"), never zero. Units of x and t are tagged by
/// the producer (lambda1/tau1 for kinetic runs, SI or scheme units for fvm).
struct Profile {
  std::vector<double> x;
  std::vector<double> rho, U, Tn, Tx, Ttot;
  double t = 0.0;
  ProfileSource source = ProfileSource::Freemol;
  std::string x_unit = "lambda1";
  std::string t_unit = "tau1";
};

struct OvershootReport {
  double max_over;   // rho*_max - 1, clamped at 0
  double max_under;  // -rho*_min, clamped at 0
};

/// Density normalized by the far-field plateaus (mean over the outer 10% of
/// cells each side), mapped so the plateaus sit at 1 (left) and 0 (right)
/// when the left plateau is denser, and conversely.
std::vector<double> normalized_density(const Profile& p);

/// Thickness d = (x|rho*=0.2 - x|rho*=0.8)/0.6 with crossings located on the
/// central monotone segment around the median 0.5 crossing.
double thickness(const Profile& p);

OvershootReport overshoot(const Profile& p);

struct ScalingFit {
  double exponent;
  double std_error;
};

/// Log-log least-squares slope of d against t.
ScalingFit scaling_exponent(const std::vector<std::pair<double, double>>& td);

/// Grid-weighted mean absolute difference of one field against a reference
/// sampler evaluated on p's grid. field selects a Profile array.
double l1_error(const Profile& p, const std::function<double(double)>& ref,
                const std::vector<double>& field);

double total_temperature(double Tx, double Tn);

}  // namespace kingas

#endif
