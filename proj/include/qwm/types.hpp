#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qwm {

using Complex = std::complex<double>;

/// The 12 ordered moments of the cascaded source-probe problem.
using StateVector = Eigen::Vector<Complex, 12>;
using RealMatrix = Eigen::Matrix<double, 12, 12>;
using ComplexMatrix = Eigen::Matrix<Complex, 12, 12>;
using ComplexVector = Eigen::Vector<Complex, 12>;

/// 0-based positions of the moments inside StateVector.
///
/// Ordering: <s-pr>, <sm_s sz_pr>, <sz_s sm_pr>, <s+pr>, <sp_s sz_pr>,
/// <sz_s sp_pr>, <sm_s sm_pr>, <sp_s sp_pr>, <sz_pr>, <sp_s sm_pr>,
/// <sm_s sp_pr>, <sz_s sz_pr>.
namespace moment {
inline constexpr int pr_minus = 0;   ///< <sigma_-^pr>
inline constexpr int sm_z = 1;       ///< <sigma_-^s sigma_z^pr>
inline constexpr int z_sm = 2;       ///< <sigma_z^s sigma_-^pr>
inline constexpr int pr_plus = 3;    ///< <sigma_+^pr>
inline constexpr int sp_z = 4;       ///< <sigma_+^s sigma_z^pr>
inline constexpr int z_sp = 5;       ///< <sigma_z^s sigma_+^pr>
inline constexpr int mm = 6;         ///< <sigma_-^s sigma_-^pr>
inline constexpr int pp = 7;         ///< <sigma_+^s sigma_+^pr>
inline constexpr int pr_z = 8;       ///< <sigma_z^pr>
inline constexpr int pm = 9;         ///< <sigma_+^s sigma_-^pr>
inline constexpr int mp = 10;        ///< <sigma_-^s sigma_+^pr>
inline constexpr int zz = 11;        ///< <sigma_z^s sigma_z^pr>
}  // namespace moment

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical parameters (non-positive decay rate, mu outside [0,1], ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure (ill-conditioned solve, aliasing, step-size underflow).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (order cap exceeded, window too short, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwm
