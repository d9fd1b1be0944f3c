#pragma once

#include <array>

#include "qwm/params.hpp"
#include "qwm/state.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Drive-independent matrix of the stationary problem 0 = (A + W)X + b,
/// written in dimensionless time tau = gamma_pr * t.
///
/// A is block diagonal in the moment ordering:
///   A_minus on (0,1,2), A_plus on (3,4,5), scalars on 6 and 7,
///   A_z on (8,9,10,11).
/// All entries are rational in r except the cascaded coupling terms
/// (+-alpha, +-alpha/2, +-2*alpha). Nonsingular for r > 0:
///   det A_minus = det A_plus = -(r+2)(2r+1)/8,  det A_z = (r+1)^3/4.
inline RealMatrix build_A(const SystemParams& params) {
  params.validate();
  const double r = params.r();
  const double a = params.alpha();

  RealMatrix m = RealMatrix::Zero();

  // A_minus block, acting on (<s-pr>, <sm_s sz_pr>, <sz_s sm_pr>).
  m(0, 0) = -0.5;
  m(0, 1) = a;
  m(1, 0) = -a;
  m(1, 1) = -(1.0 + r / 2.0);
  m(1, 2) = -a;
  m(2, 0) = -r;
  m(2, 1) = -a;
  m(2, 2) = -(r + 0.5);

  // A_plus block, same form on (<s+pr>, <sp_s sz_pr>, <sz_s sp_pr>).
  m(3, 3) = -0.5;
  m(3, 4) = a;
  m(4, 3) = -a;
  m(4, 4) = -(1.0 + r / 2.0);
  m(4, 5) = -a;
  m(5, 3) = -r;
  m(5, 4) = -a;
  m(5, 5) = -(r + 0.5);

  // Scalar blocks for <sm_s sm_pr> and <sp_s sp_pr>.
  m(6, 6) = -(r + 1.0) / 2.0;
  m(7, 7) = -(r + 1.0) / 2.0;

  // A_z block on (<sz_pr>, <sp_s sm_pr>, <sm_s sp_pr>, <sz_s sz_pr>).
  m(8, 8) = -1.0;
  m(8, 9) = -2.0 * a;
  m(8, 10) = -2.0 * a;
  m(9, 8) = a / 2.0;
  m(9, 9) = -(r + 1.0) / 2.0;
  m(9, 11) = a / 2.0;
  m(10, 8) = a / 2.0;
  m(10, 10) = -(r + 1.0) / 2.0;
  m(10, 11) = a / 2.0;
  m(11, 8) = -r;
  m(11, 9) = 2.0 * a;
  m(11, 10) = 2.0 * a;
  m(11, 11) = -(r + 1.0);

  return m;
}

/// Which drive component an entry of the drive matrix carries.
enum class DriveFactor { PMinus, PPlus, SPlus, SMinus };

inline Complex drive_value(const DriveAmplitudes& d, DriveFactor f) {
  switch (f) {
    case DriveFactor::PMinus: return d.p_minus;
    case DriveFactor::PPlus: return d.p_plus;
    case DriveFactor::SPlus: return d.s_plus;
    case DriveFactor::SMinus: return d.s_minus;
  }
  return Complex{};
}

/// One nonzero entry of the drive matrix: coeff * drive at (row, col).
struct DriveMatrixEntry {
  int row;
  int col;
  DriveFactor factor;
  double coeff;
};

/// The 28 nonzero entries of the drive-linear matrix W. Each is a single
/// drive component with coefficient +-1 or +-2. This table is the single
/// source of truth for both the numeric matrix and the symbolic application
/// used by the perturbative recursion.
inline const std::array<DriveMatrixEntry, 28>& drive_matrix_entries() {
  using F = DriveFactor;
  static const std::array<DriveMatrixEntry, 28> entries = {{
      {0, 8, F::PMinus, 1.0},
      {1, 6, F::PPlus, -2.0},
      {1, 10, F::PMinus, -2.0},
      {1, 11, F::SPlus, 1.0},
      {2, 6, F::SMinus, -2.0},
      {2, 9, F::SPlus, -2.0},
      {2, 11, F::PMinus, 1.0},
      {3, 8, F::PPlus, 1.0},
      {4, 7, F::PMinus, -2.0},
      {4, 9, F::PPlus, -2.0},
      {4, 11, F::SMinus, 1.0},
      {5, 7, F::SPlus, -2.0},
      {5, 10, F::SMinus, -2.0},
      {5, 11, F::PPlus, 1.0},
      {6, 1, F::PMinus, 1.0},
      {6, 2, F::SPlus, 1.0},
      {7, 4, F::PPlus, 1.0},
      {7, 5, F::SMinus, 1.0},
      {8, 0, F::PPlus, -2.0},
      {8, 3, F::PMinus, -2.0},
      {9, 2, F::SMinus, 1.0},
      {9, 4, F::PMinus, 1.0},
      {10, 1, F::PPlus, 1.0},
      {10, 5, F::SPlus, 1.0},
      {11, 1, F::SMinus, -2.0},
      {11, 2, F::PPlus, -2.0},
      {11, 4, F::SPlus, -2.0},
      {11, 5, F::PMinus, -2.0},
  }};
  return entries;
}

/// Drive-linear matrix W(d). Homogeneous of degree one in (p-, p+, s+, s-);
/// W(0) = 0.
inline ComplexMatrix build_Omega(const DriveAmplitudes& d) {
  ComplexMatrix m = ComplexMatrix::Zero();
  for (const auto& e : drive_matrix_entries())
    m(e.row, e.col) += e.coeff * drive_value(d, e.factor);
  return m;
}

/// Saturation factor of the source stationary solution,
/// F_s = 1 / (1 + 8 s_+ s_- / r^2).
inline Complex source_saturation(const DriveAmplitudes& d, double r) {
  return 1.0 / (1.0 + 8.0 * d.s_plus * d.s_minus / (r * r));
}

/// Inhomogeneous vector of the stationary problem. Entry 8 is the ground
/// state feed (-1); entries 1, 4 and 11 carry the stationary source averages
/// -<sm_s>, -<sp_s>, -<sz_s>.
inline ComplexVector build_b(const DriveAmplitudes& d, double r) {
  if (!(r > 0.0)) throw ParameterError("linewidth ratio r must be positive");
  const Complex fs = source_saturation(d, r);
  ComplexVector b = ComplexVector::Zero();
  b[moment::sm_z] = 2.0 * d.s_plus / r * fs;
  b[moment::sp_z] = 2.0 * d.s_minus / r * fs;
  b[moment::pr_z] = Complex(-1.0, 0.0);
  b[moment::zz] = fs;
  return b;
}

/// Stationary solution of the driven source qubit alone.
struct SourceSteadyState {
  double sigma_z;        ///< <sigma_z^s>
  Complex sigma_minus;   ///< coefficient of e^{+i delta_omega t} in <sigma_-^s>
};

inline SourceSteadyState source_steady_state(const SystemParams& params) {
  if (!(params.gamma_s > 0.0)) throw ParameterError("gamma_s must be positive");
  const double sat = 8.0 * std::norm(params.omega_s) / (params.gamma_s * params.gamma_s);
  return SourceSteadyState{
      -1.0 / (1.0 + sat),
      -2.0 * params.omega_s / (params.gamma_s * (1.0 + sat)),
  };
}

}  // namespace qwm
