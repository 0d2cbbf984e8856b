#include "kingas/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace kingas {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_num(const std::string& s) {
  if (s == "nan" || s == "-nan")
    return std::numeric_limits<double>::quiet_NaN();
  return std::stod(s);
}

}  // namespace

void write_profile_csv(const std::string& path, const Profile& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  std::vector<double> rs;
  try {
    rs = normalized_density(p);
  } catch (const DiagnosticError&) {
    rs.assign(p.x.size(), std::numeric_limits<double>::quiet_NaN());
  }
  out << "x_over_lambda1,rho,rho_star,U,Tn,Tx,Ttot\n";
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    out << num(p.x[i]) << ',' << num(p.rho[i]) << ',' << num(rs[i]) << ','
        << num(p.U[i]) << ',' << num(p.Tn[i]) << ',' << num(p.Tx[i]) << ','
        << num(p.Ttot[i]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

Profile read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw IoError("empty profile csv: " + path);
  if (line.rfind("x_over_lambda1,", 0) != 0)
    throw IoError("unexpected profile csv header in " + path);
  Profile p;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f;
    std::vector<double> row;
    while (std::getline(ss, f, ',')) row.push_back(parse_num(f));
    if (row.size() != 7)
      throw IoError("malformed profile csv row in " + path);
    p.x.push_back(row[0]);
    p.rho.push_back(row[1]);
    // row[2] is rho_star, derived on write
    p.U.push_back(row[3]);
    p.Tn.push_back(row[4]);
    p.Tx.push_back(row[5]);
    p.Ttot.push_back(row[6]);
  }
  return p;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "t_over_tau1,thickness,overshoot,undershoot,Tx_minus_Tn_max\n";
  for (const auto& r : rows) {
    out << num(r.t) << ',' << num(r.thickness) << ',' << num(r.overshoot)
        << ',' << num(r.undershoot) << ',' << num(r.tx_minus_tn_max) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

DiagnosticsRow diagnostics_row(const Profile& p) {
  DiagnosticsRow row;
  row.t = p.t;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    row.thickness = thickness(p);
  } catch (const DiagnosticError&) {
    row.thickness = nan;
  }
  try {
    const OvershootReport o = overshoot(p);
    row.overshoot = o.max_over;
    row.undershoot = o.max_under;
  } catch (const DiagnosticError&) {
    row.overshoot = row.undershoot = nan;
  }
  row.tx_minus_tn_max = nan;
  for (std::size_t i = 0; i < p.Tx.size(); ++i) {
    const double d = p.Tx[i] - p.Tn[i];
    if (std::isfinite(d) &&
        (!std::isfinite(row.tx_minus_tn_max) || d > row.tx_minus_tn_max))
      row.tx_minus_tn_max = d;
  }
  return row;
}

}  // namespace kingas
