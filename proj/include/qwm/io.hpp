#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qwm/drive_series.hpp"
#include "qwm/ode.hpp"
#include "qwm/stationary.hpp"

namespace qwm {

/// Fixed 17-significant-digit formatting; round-trips doubles exactly and
/// keeps repeated runs byte identical.
inline std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// CSV export of a spectrum: `n,re,im,abs`, harmonics ascending, LF endings.
inline void write_spectrum_csv(std::ostream& os, const Spectrum& spec) {
  os << "n,re,im,abs\n";
  for (const auto& [n, a] : spec.amplitudes) {
    os << n << "," << format_g17(a.real()) << "," << format_g17(a.imag()) << ","
       << format_g17(std::abs(a)) << "\n";
  }
}

inline nlohmann::json params_json(const SystemParams& p) {
  return nlohmann::json{
      {"gamma_s", p.gamma_s},       {"gamma_pr", p.gamma_pr},
      {"mu", p.mu},                 {"omega_s_re", p.omega_s.real()},
      {"omega_s_im", p.omega_s.imag()}, {"omega_pr_re", p.omega_pr.real()},
      {"omega_pr_im", p.omega_pr.imag()}, {"delta_omega", p.delta_omega},
      {"r", p.r()},                 {"alpha", p.alpha()},
  };
}

/// JSON mirror of the CSV with a metadata block.
inline nlohmann::json spectrum_json(const Spectrum& spec) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [n, a] : spec.amplitudes) {
    rows.push_back({{"n", n},
                    {"re", a.real()},
                    {"im", a.imag()},
                    {"abs", std::abs(a)}});
  }
  return nlohmann::json{{"metadata",
                         {{"params", params_json(spec.params)},
                          {"method", spec.method},
                          {"samples", spec.samples}}},
                        {"spectrum", rows}};
}

/// Monomial-table export: `a,b,c,d,n,re,im` sorted by (total_order,a,b,c,d).
inline void write_series_table_csv(std::ostream& os, const DriveSeries& series) {
  os << "a,b,c,d,n,re,im\n";
  for (const auto& row : table_rows(series)) {
    os << row.key.a << "," << row.key.b << "," << row.key.c << "," << row.key.d
       << "," << row.harmonic << "," << format_g17(row.coeff.real()) << ","
       << format_g17(row.coeff.imag()) << "\n";
  }
}

inline nlohmann::json series_table_json(const DriveSeries& series) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table_rows(series)) {
    rows.push_back({{"a", row.key.a},
                    {"b", row.key.b},
                    {"c", row.key.c},
                    {"d", row.key.d},
                    {"n", row.harmonic},
                    {"re", row.coeff.real()},
                    {"im", row.coeff.imag()}});
  }
  return rows;
}

/// Debug dump of an integrated trajectory: `t,re_1..re_12,im_1..im_12`.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t";
  for (int i = 1; i <= 12; ++i) os << ",re_" << i;
  for (int i = 1; i <= 12; ++i) os << ",im_" << i;
  os << "\n";
  for (std::size_t k = 0; k < traj.tau.size(); ++k) {
    os << format_g17(traj.tau[k] / traj.params.gamma_pr);
    for (int i = 0; i < 12; ++i) os << "," << format_g17(traj.states[k].probe[i].real());
    for (int i = 0; i < 12; ++i) os << "," << format_g17(traj.states[k].probe[i].imag());
    os << "\n";
  }
}

}  // namespace qwm
