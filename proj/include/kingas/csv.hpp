#ifndef KINGAS_CSV_HPP
#define KINGAS_CSV_HPP

#include <string>

#include "kingas/diagnostics.hpp"

namespace kingas {

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DiagnosticsRow {
  double t;
  double thickness;
  double overshoot;
  double undershoot;
  double tx_minus_tn_max;
};

/// Full round-trip precision (17 significant digits), '.' decimal separator.
void write_profile_csv(const std::string& path, const Profile& p);
Profile read_profile_csv(const std::string& path);

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows);

/// Diagnostics of one profile; measures that fail (degenerate profile)
/// come back as NaN rather than aborting the row.
DiagnosticsRow diagnostics_row(const Profile& p);

}  // namespace kingas

#endif
