#pragma once

#include <vector>

#include <boost/numeric/odeint.hpp>

#include "qwm/equations.hpp"
#include "qwm/params.hpp"
#include "qwm/state.hpp"
#include "qwm/stationary.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Probe/correlator moments plus the live source Bloch triple. Unlike the
/// stationary solver, the oracle integrates the source alongside the probe
/// instead of substituting its steady state.
struct MomentState {
  StateVector probe = vacuum_state();
  Complex src_minus{0.0, 0.0};
  Complex src_plus{0.0, 0.0};
  Complex src_z{-1.0, 0.0};
};

struct OdeSettings {
  double rel_tol = 1e-10;          ///< per-step relative tolerance
  double abs_tol = 1e-12;          ///< per-step absolute tolerance
  double transient_time = -1.0;    ///< physical time discarded before the window;
                                   ///< auto (<=0): 40/min(gamma_s, gamma_pr)
  int beat_periods = 4;            ///< window length in beat periods 2*pi/delta_omega
  int samples_per_period = 256;    ///< uniform samples per beat period
  unsigned long long max_rhs_evals = 400000000ULL;  ///< stall guard
};

/// Uniformly sampled trajectory over the analysis window. The window starts
/// on a beat-period boundary, so theta(tau) = 0 mod 2*pi at the first sample.
struct Trajectory {
  std::vector<double> tau;          ///< dimensionless times gamma_pr * t
  std::vector<MomentState> states;
  SystemParams params;

  double theta_at(double t) const { return params.delta_omega * t / params.gamma_pr; }
  double window_beat_periods() const {
    if (tau.size() < 2) return 0.0;
    const double beat = 2.0 * M_PI * params.gamma_pr / params.delta_omega;
    return (tau.back() - tau.front()) / beat;
  }
};

namespace detail {

using OdeState = std::vector<Complex>;  // 12 moments + 3 source components

struct CascadedOdeRhs {
  SystemParams params;
  double dtheta_dtau;
  unsigned long long cap;
  mutable unsigned long long evals = 0;

  void operator()(const OdeState& y, OdeState& dy, double tau) const {
    if (++evals > cap)
      throw NumericError("time integration stalled: step-size underflow or stiffness");
    const DriveAmplitudes d = drive_amplitudes(params, dtheta_dtau * tau);
    StateVector x;
    for (int i = 0; i < 12; ++i) x[i] = y[i];
    const StateVector dx = cascaded_moments_rhs(x, d, params.r(), params.alpha(),
                                                y[12], y[13], y[14]);
    dy.resize(15);
    for (int i = 0; i < 12; ++i) dy[i] = dx[i];
    source_bloch_rhs(d, params.r(), y[12], y[13], y[14], dy[12], dy[13], dy[14]);
  }
};

inline MomentState unpack(const OdeState& y) {
  MomentState s;
  for (int i = 0; i < 12; ++i) s.probe[i] = y[i];
  s.src_minus = y[12];
  s.src_plus = y[13];
  s.src_z = y[14];
  return s;
}

}  // namespace detail

/// Integrate the full time-dependent moment equations at finite delta_omega
/// from the joint ground state, by an adaptive embedded Dormand-Prince pair
/// with dense-output sampling. Returns the uniformly sampled window after the
/// transient has decayed.
inline Trajectory integrate(const SystemParams& params, const OdeSettings& settings = {}) {
  params.validate();
  if (!(params.delta_omega > 0.0))
    throw ParameterError("the time-domain oracle requires delta_omega > 0");
  if (settings.beat_periods < 1) throw ConfigError("window must cover at least one beat period");
  if (settings.samples_per_period < 2) throw ConfigError("need at least 2 samples per period");

  const double min_rate = std::min(params.gamma_s, params.gamma_pr);
  double transient = settings.transient_time > 0.0 ? settings.transient_time
                                                   : 40.0 / min_rate;
  transient = std::max(transient, 10.0 / min_rate);

  const double tau_beat = 2.0 * M_PI * params.gamma_pr / params.delta_omega;
  const double tau_transient = params.gamma_pr * transient;
  // Start the window on a beat boundary so its first sample sits at theta = 0.
  const double tau0 = std::ceil(tau_transient / tau_beat) * tau_beat;
  const int n_samples = settings.beat_periods * settings.samples_per_period + 1;
  const double dt_sample = tau_beat / settings.samples_per_period;

  detail::CascadedOdeRhs rhs{params, params.delta_omega / params.gamma_pr,
                             settings.max_rhs_evals};

  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(settings.abs_tol, settings.rel_tol,
                                           odeint::runge_kutta_dopri5<detail::OdeState>());

  detail::OdeState y(15, Complex{0.0, 0.0});
  y[moment::pr_z] = Complex(-1.0, 0.0);
  y[moment::zz] = Complex(1.0, 0.0);
  y[14] = Complex(-1.0, 0.0);  // source ground state

  stepper.initialize(y, 0.0, std::min(0.1, dt_sample));

  Trajectory traj;
  traj.params = params;
  traj.tau.reserve(n_samples);
  traj.states.reserve(n_samples);

  detail::OdeState yk(15);
  for (int k = 0; k < n_samples; ++k) {
    const double target = tau0 + k * dt_sample;
    while (stepper.current_time() < target) stepper.do_step(rhs);
    stepper.calc_state(target, yk);
    traj.tau.push_back(target);
    traj.states.push_back(detail::unpack(yk));
  }
  return traj;
}

/// Windowed harmonic projection amplitude(n) = (1/T) int X(t) e^{-i n dw t} dt
/// by the trapezoid rule on the uniform samples. Spectrally accurate because
/// the window covers an integer number of beat periods.
inline Spectrum project_harmonics(const Trajectory& traj, const std::vector<int>& harmonics,
                                  int component = moment::pr_minus) {
  if (traj.tau.size() < 2) throw ConfigError("trajectory has no analysis window");
  if (traj.window_beat_periods() < 3.0 - 1e-9)
    throw ConfigError("analysis window must cover at least 3 beat periods");

  const std::size_t m = traj.tau.size();
  Spectrum spec;
  spec.params = traj.params;
  spec.method = "ode";
  spec.samples = static_cast<int>(m);
  for (int n : harmonics) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
      const double w = (k == 0 || k + 1 == m) ? 0.5 : 1.0;
      const double theta = traj.theta_at(traj.tau[k]);
      acc += w * traj.states[k].probe[component] * std::polar(1.0, -n * theta);
    }
    spec.amplitudes[n] = acc / static_cast<double>(m - 1);
  }
  return spec;
}

}  // namespace qwm
