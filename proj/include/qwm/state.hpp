#pragma once

#include "qwm/types.hpp"

namespace qwm {

/// Joint ground state: <sigma_z^pr> = -1, <sigma_z^s sigma_z^pr> = +1,
/// everything else zero. This is the fixed point of the undriven dynamics.
inline StateVector vacuum_state() {
  StateVector x = StateVector::Zero();
  x[moment::pr_z] = Complex(-1.0, 0.0);
  x[moment::zz] = Complex(1.0, 0.0);
  return x;
}

/// Largest violation of the Hermitian-conjugate pairing a physical state must
/// satisfy: entries (3,4,5,7,10) are the conjugates of (0,1,2,6,9) and
/// entries 8, 11 are real.
inline double conjugation_defect(const StateVector& x) {
  double d = 0.0;
  auto upd = [&d](Complex lhs, Complex rhs) {
    d = std::max(d, std::abs(lhs - std::conj(rhs)));
  };
  upd(x[moment::pr_plus], x[moment::pr_minus]);
  upd(x[moment::sp_z], x[moment::sm_z]);
  upd(x[moment::z_sp], x[moment::z_sm]);
  upd(x[moment::pp], x[moment::mm]);
  upd(x[moment::mp], x[moment::pm]);
  d = std::max(d, std::abs(x[moment::pr_z].imag()));
  d = std::max(d, std::abs(x[moment::zz].imag()));
  return d;
}

/// Impose the pairing exactly (used to build physical random states in tests
/// and to symmetrize initial conditions).
inline StateVector symmetrized(const StateVector& x) {
  StateVector y = x;
  y[moment::pr_plus] = std::conj(x[moment::pr_minus]);
  y[moment::sp_z] = std::conj(x[moment::sm_z]);
  y[moment::z_sp] = std::conj(x[moment::z_sm]);
  y[moment::pp] = std::conj(x[moment::mm]);
  y[moment::mp] = std::conj(x[moment::pm]);
  y[moment::pr_z] = Complex(x[moment::pr_z].real(), 0.0);
  y[moment::zz] = Complex(x[moment::zz].real(), 0.0);
  return y;
}

}  // namespace qwm
