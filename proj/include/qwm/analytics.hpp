#pragma once

#include <array>
#include <string>

#include "qwm/drive_series.hpp"
#include "qwm/params.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Closed-form cascaded side-peak amplitudes: the coefficient of
/// e^{i n delta_omega t} in <sigma_-^pr> at leading order in the drives,
/// for n in {-1,+1,-3,+3,-5,+5}.
inline Complex cascaded_peak(int n, const SystemParams& p) {
  const double gs = p.gamma_s, gp = p.gamma_pr;
  const double a = p.alpha();
  const Complex os = p.omega_s, op = p.omega_pr;
  const Complex osc = std::conj(os), opc = std::conj(op);
  switch (n) {
    case -1:
      return -2.0 * op / gp;
    case +1:
      return 4.0 * a * os / gs;
    case -3:
      return -32.0 * a * op * op * osc / (gs * gp * gp);
    case +3:
      return 64.0 * a * a * os * os * opc / (gs * gp * (gs + gp));
    case -5:
      return -a * a * (512.0 * gs + 768.0 * gp) * op * op * op * osc * osc /
             (gs * gp * gp * gp * (gs + gp) * (gs + gp));
    case +5:
      // Denominator in factored form gs*gp^2*(gs+gp)^2*(gs+2gp); expanded it
      // is gs*gp^2*(gs^3 + 4 gs^2 gp + 5 gs gp^2 + 2 gp^3).
      return a * a * a * (1024.0 * gs + 2560.0 * gp) * os * os * os * opc * opc /
             (gs * gp * gp * (gs + gp) * (gs + gp) * (gs + 2.0 * gp));
    default:
      throw ConfigError("cascaded_peak: unsupported harmonic index");
  }
}

/// Weak-drive wave-mixing amplitudes of a single qubit with decay gamma
/// driven by two coherent tones Omega_1 e^{-i dw t} and Omega_2 e^{+i dw t}.
inline Complex single_qubit_coherent_peak(int n, double gamma, Complex omega1,
                                          Complex omega2) {
  const double g3 = gamma * gamma * gamma;
  const double g5 = g3 * gamma * gamma;
  switch (n) {
    case -1: return 2.0 * omega1 / gamma;
    case +1: return 2.0 * omega2 / gamma;
    case -3: return 16.0 * omega2 * omega1 * omega1 / g3;
    case +3: return 16.0 * omega1 * omega2 * omega2 / g3;
    case -5: return 128.0 * omega1 * omega1 * omega1 * omega2 * omega2 / g5;
    case +5: return 128.0 * omega2 * omega2 * omega2 * omega1 * omega1 / g5;
    default:
      throw ConfigError("single_qubit_coherent_peak: unsupported harmonic index");
  }
}

/// Mapping of the cascaded system onto an effectively coherently driven
/// single qubit, exact in the coherent-filtering limit gamma_s >> gamma_pr.
struct EffectiveRabi {
  double gamma;     ///< = gamma_pr
  Complex omega1;   ///< = Omega_pr
  Complex omega2;   ///< = -2 mu Omega_s sqrt(gamma_pr/gamma_s)
};

/// With the voltage parametrization Omega_s = sqrt(gamma_s) eps_s this gives
/// omega2 = -2 mu sqrt(gamma_pr) eps_s, independent of gamma_s. The sign is a
/// phase convention from the cascaded coupling and drops out of intensities.
inline EffectiveRabi effective_rabi(const SystemParams& p) {
  p.validate();
  return EffectiveRabi{
      p.gamma_pr, p.omega_pr,
      -2.0 * p.mu * p.omega_s * std::sqrt(p.gamma_pr / p.gamma_s)};
}

/// Ratio of a cascaded side-peak magnitude to its coherent-filtering-limit
/// value at fixed drive voltages, for n in {+3, -5, +5}. All three lie in
/// (0,1) for finite rates and tend to 1 as gamma_s -> infinity.
inline double suppression_ratio_closed(int n, double gamma_s, double gamma_pr) {
  if (!(gamma_s > 0.0) || !(gamma_pr > 0.0))
    throw ParameterError("decay rates must be positive");
  const double gs = gamma_s, gp = gamma_pr;
  switch (n) {
    case +3:
      return gs / (gs + gp);
    case -5:
      return gs * (gs + 1.5 * gp) / ((gs + gp) * (gs + gp));
    case +5:
      return gs * gs * (gs + 2.5 * gp) / ((gs + gp) * (gs + gp) * (gs + 2.0 * gp));
    default:
      throw ConfigError("suppression_ratio_closed: unsupported harmonic index");
  }
}

/// Limiting side-peak amplitudes for gamma_pr >> gamma_s, where the probe
/// sees the full antibunched fluorescence of the source.
inline Complex antibunching_limit_peak(int n, const SystemParams& p) {
  const double gs = p.gamma_s, gp = p.gamma_pr, mu = p.mu;
  const Complex os = p.omega_s, opc = std::conj(p.omega_pr);
  const double ratio = gs / gp;
  switch (n) {
    case +3:
      return mu * mu * ratio * 64.0 * os * os * opc / (gs * gp * gp);
    case -5:
      return -mu * mu * ratio * 768.0 * p.omega_pr * p.omega_pr * p.omega_pr *
             std::conj(os) * std::conj(os) / (gs * gp * gp * gp * gp);
    case +5:
      return mu * mu * mu * std::pow(ratio, 1.5) * 1280.0 * os * os * os * opc *
             opc / (gs * gp * gp * gp * gp);
    default:
      throw ConfigError("antibunching_limit_peak: unsupported harmonic index");
  }
}

/// One row of the peak/monomial summary table: which monomial produces each
/// side peak, how many source-field factors it contains, and the small-r
/// scaling of the normalized amplitude (S ~ prefactor * r^power; power 0
/// means the peak is not suppressed).
struct PeakMonomialRow {
  int n;
  MonomialKey monomial;
  int source_factors;
  std::string broadband_scaling;
  double asymptote_prefactor;
  int asymptote_power;
};

inline std::array<PeakMonomialRow, 6> table1_rows() {
  return {{
      {-1, MonomialKey{1, 0, 0, 0}, 0, "not suppressed", 1.0, 0},
      {+1, MonomialKey{0, 0, 1, 0}, 1, "not suppressed", 1.0, 0},
      {-3, MonomialKey{2, 0, 0, 1}, 1, "not suppressed", 1.0, 0},
      {+3, MonomialKey{0, 1, 2, 0}, 2, "gamma_s/gamma_pr", 1.0, 1},
      {-5, MonomialKey{3, 0, 0, 2}, 2, "(3/2) gamma_s/gamma_pr", 1.5, 1},
      {+5, MonomialKey{0, 2, 3, 0}, 3, "(5/4) (gamma_s/gamma_pr)^2", 1.25, 2},
  }};
}

}  // namespace qwm
