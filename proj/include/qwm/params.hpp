#pragma once

#include <cmath>

#include "qwm/types.hpp"

namespace qwm {

/// Physical parameters of the cascaded source-probe system.
///
/// Both qubits are resonant at the same transition frequency; the source is
/// driven at +delta_omega and the probe at -delta_omega relative to it. All
/// quantities are rates in the same (arbitrary) inverse-time unit. The
/// cascaded coupling alpha = mu*sqrt(gamma_s/gamma_pr) is always derived from
/// (mu, r), never stored, so alpha^2 == mu^2 * r holds by construction.
struct SystemParams {
  double gamma_s = 1.0;    ///< source radiative decay rate, > 0
  double gamma_pr = 1.0;   ///< probe radiative decay rate, > 0
  double mu = 1.0;         ///< fraction of source radiation reaching the probe, in [0,1]
  Complex omega_s{0.0, 0.0};   ///< source Rabi amplitude
  Complex omega_pr{0.0, 0.0};  ///< probe Rabi amplitude
  double delta_omega = 0.0;    ///< half detuning between the two drive tones, >= 0

  /// Linewidth ratio gamma_s / gamma_pr.
  double r() const { return gamma_s / gamma_pr; }

  /// Dimensionless cascaded coupling mu * sqrt(gamma_s / gamma_pr).
  double alpha() const { return mu * std::sqrt(r()); }

  /// Drive voltages, defined through Omega = sqrt(gamma) * eps.
  Complex eps_s() const { return omega_s / std::sqrt(gamma_s); }
  Complex eps_pr() const { return omega_pr / std::sqrt(gamma_pr); }

  void validate() const {
    if (!(gamma_s > 0.0) || !(gamma_pr > 0.0))
      throw ParameterError("decay rates must be positive");
    if (!(mu >= 0.0 && mu <= 1.0))
      throw ParameterError("transmission fraction mu must lie in [0,1]");
    if (!(delta_omega >= 0.0))
      throw ParameterError("delta_omega must be non-negative");
    if (!std::isfinite(std::abs(omega_s)) || !std::isfinite(std::abs(omega_pr)))
      throw ParameterError("drive amplitudes must be finite");
  }

  static SystemParams from_rabi(double gamma_s, double gamma_pr, double mu,
                                Complex omega_pr, Complex omega_s,
                                double delta_omega = 0.0) {
    SystemParams p{gamma_s, gamma_pr, mu, omega_s, omega_pr, delta_omega};
    p.validate();
    return p;
  }

  /// Voltage parametrization Omega = sqrt(gamma) * eps.
  static SystemParams from_voltages(double gamma_s, double gamma_pr, double mu,
                                    Complex eps_pr, Complex eps_s,
                                    double delta_omega = 0.0) {
    if (!(gamma_s > 0.0) || !(gamma_pr > 0.0))
      throw ParameterError("decay rates must be positive");
    return from_rabi(gamma_s, gamma_pr, mu, std::sqrt(gamma_pr) * eps_pr,
                     std::sqrt(gamma_s) * eps_s, delta_omega);
  }

  /// Same system with both drive amplitudes rescaled; used by convergence scans.
  SystemParams scaled_drives(double factor) const {
    SystemParams p = *this;
    p.omega_s *= factor;
    p.omega_pr *= factor;
    return p;
  }
};

/// The four dimensionless drive components evaluated at a rotating-frame
/// phase theta = delta_omega * t.
///
/// p_-  = (Omega_pr/gamma_pr) e^{-i theta}   probe tone at -delta_omega
/// p_+  = (conj(Omega_pr)/gamma_pr) e^{+i theta}
/// s_+  = (Omega_s/gamma_pr) e^{+i theta}    source tone at +delta_omega
/// s_-  = (conj(Omega_s)/gamma_pr) e^{-i theta}
///
/// The products p_+ p_- and s_+ s_- are phase independent.
struct DriveAmplitudes {
  Complex p_minus{0.0, 0.0};
  Complex p_plus{0.0, 0.0};
  Complex s_plus{0.0, 0.0};
  Complex s_minus{0.0, 0.0};
};

inline DriveAmplitudes drive_amplitudes(const SystemParams& params, double theta) {
  const Complex eta = std::polar(1.0, theta);
  return DriveAmplitudes{
      params.omega_pr / params.gamma_pr / eta,
      std::conj(params.omega_pr) / params.gamma_pr * eta,
      params.omega_s / params.gamma_pr * eta,
      std::conj(params.omega_s) / params.gamma_pr / eta,
  };
}

inline double max_drive_magnitude(const DriveAmplitudes& d) {
  return std::max(std::abs(d.p_minus), std::abs(d.s_plus));
}

/// Weak-driving guard |p|, |s| < 0.3. Violations are reported as warnings by
/// callers, not hard errors: the exact solver stays valid, only the
/// perturbative series loses accuracy.
inline constexpr double kWeakDriveLimit = 0.3;

inline bool weak_drive_ok(const DriveAmplitudes& d) {
  return max_drive_magnitude(d) < kWeakDriveLimit;
}

}  // namespace qwm
