#pragma once

#include "qwm/cascaded_system.hpp"
#include "qwm/params.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Right-hand side of the twelve coupled moment equations in dimensionless
/// time tau = gamma_pr * t, transcribed equation by equation from the
/// cascaded master equation with the source averages passed in explicitly.
///
/// This transcription is deliberately independent of build_A / build_Omega /
/// build_b: the matrix constructors are validated against it. The equations
/// for <sp_pr>, <sm_s sz_pr>, <sz_s sp_pr>, <sm_s sm_pr> and <sp_s sm_pr>
/// are the Hermitian conjugates of their partners (swap +- labels, conjugate
/// the drive factors p- <-> p+, s+ <-> s-).
inline StateVector cascaded_moments_rhs(const StateVector& x,
                                        const DriveAmplitudes& d, double r,
                                        double alpha, Complex src_minus,
                                        Complex src_plus, Complex src_z) {
  namespace mo = moment;
  const Complex pm = d.p_minus, pp = d.p_plus, sp = d.s_plus, sm = d.s_minus;

  StateVector dx;

  // d<s-pr> = p- <sz_pr> + alpha <sm_s sz_pr> - <s-pr>/2
  dx[mo::pr_minus] = pm * x[mo::pr_z] + alpha * x[mo::sm_z] - 0.5 * x[mo::pr_minus];

  // conjugate of the previous line
  dx[mo::pr_plus] = pp * x[mo::pr_z] + alpha * x[mo::sp_z] - 0.5 * x[mo::pr_plus];

  // d<sp_s sz_pr> = -2 p- <sp_s sp_pr> - 2 p+ <sp_s sm_pr> + s- <sz_s sz_pr>
  //                 - alpha <s+pr> - alpha <sz_s sp_pr>
  //                 - (1 + r/2) <sp_s sz_pr> - <sp_s>
  dx[mo::sp_z] = -2.0 * pm * x[mo::pp] - 2.0 * pp * x[mo::pm] + sm * x[mo::zz] -
                 alpha * x[mo::pr_plus] - alpha * x[mo::z_sp] -
                 (1.0 + r / 2.0) * x[mo::sp_z] - src_plus;

  // conjugate of the previous line
  dx[mo::sm_z] = -2.0 * pp * x[mo::mm] - 2.0 * pm * x[mo::mp] + sp * x[mo::zz] -
                 alpha * x[mo::pr_minus] - alpha * x[mo::z_sm] -
                 (1.0 + r / 2.0) * x[mo::sm_z] - src_minus;

  // d<sz_s sm_pr> = p- <sz_s sz_pr> - 2 s+ <sp_s sm_pr> - 2 s- <sm_s sm_pr>
  //                 - alpha <sm_s sz_pr> - r <s-pr> - (r + 1/2) <sz_s sm_pr>
  dx[mo::z_sm] = pm * x[mo::zz] - 2.0 * sp * x[mo::pm] - 2.0 * sm * x[mo::mm] -
                 alpha * x[mo::sm_z] - r * x[mo::pr_minus] - (r + 0.5) * x[mo::z_sm];

  // conjugate of the previous line
  dx[mo::z_sp] = pp * x[mo::zz] - 2.0 * sm * x[mo::mp] - 2.0 * sp * x[mo::pp] -
                 alpha * x[mo::sp_z] - r * x[mo::pr_plus] - (r + 0.5) * x[mo::z_sp];

  // d<sp_s sp_pr> = p+ <sp_s sz_pr> + s- <sz_s sp_pr> - (r+1)/2 <sp_s sp_pr>
  dx[mo::pp] = pp * x[mo::sp_z] + sm * x[mo::z_sp] - 0.5 * (r + 1.0) * x[mo::pp];

  // conjugate of the previous line
  dx[mo::mm] = pm * x[mo::sm_z] + sp * x[mo::z_sm] - 0.5 * (r + 1.0) * x[mo::mm];

  // d<sz_pr> = -2 p- <s+pr> - 2 p+ <s-pr>
  //            - 2 alpha (<sp_s sm_pr> + <sm_s sp_pr>) - <sz_pr> - 1
  dx[mo::pr_z] = -2.0 * pm * x[mo::pr_plus] - 2.0 * pp * x[mo::pr_minus] -
                 2.0 * alpha * (x[mo::pm] + x[mo::mp]) - x[mo::pr_z] - 1.0;

  // d<sm_s sp_pr> = s+ <sz_s sp_pr> + p+ <sm_s sz_pr>
  //                 + alpha (<sz_pr> + <sz_s sz_pr>)/2 - (r+1)/2 <sm_s sp_pr>
  dx[mo::mp] = sp * x[mo::z_sp] + pp * x[mo::sm_z] +
               alpha * 0.5 * (x[mo::pr_z] + x[mo::zz]) - 0.5 * (r + 1.0) * x[mo::mp];

  // conjugate of the previous line
  dx[mo::pm] = sm * x[mo::z_sm] + pm * x[mo::sp_z] +
               alpha * 0.5 * (x[mo::pr_z] + x[mo::zz]) - 0.5 * (r + 1.0) * x[mo::pm];

  // d<sz_s sz_pr> = -2 p- <sz_s sp_pr> - 2 p+ <sz_s sm_pr>
  //                 - 2 s+ <sp_s sz_pr> - 2 s- <sm_s sz_pr>
  //                 + 2 alpha (<sp_s sm_pr> + <sm_s sp_pr>)
  //                 - r <sz_pr> - (r+1) <sz_s sz_pr> - <sz_s>
  dx[mo::zz] = -2.0 * pm * x[mo::z_sp] - 2.0 * pp * x[mo::z_sm] -
               2.0 * sp * x[mo::sp_z] - 2.0 * sm * x[mo::sm_z] +
               2.0 * alpha * (x[mo::pm] + x[mo::mp]) - r * x[mo::pr_z] -
               (r + 1.0) * x[mo::zz] - src_z;

  return dx;
}

/// Stationary source averages at a given phase, expressed through the drive
/// components: <sm_s> = -(2 s_+/r) F_s, <sp_s> = -(2 s_-/r) F_s,
/// <sz_s> = -F_s.
struct SourceAverages {
  Complex minus;
  Complex plus;
  Complex z;
};

inline SourceAverages stationary_source_averages(const DriveAmplitudes& d, double r) {
  const Complex fs = source_saturation(d, r);
  return SourceAverages{-2.0 * d.s_plus / r * fs, -2.0 * d.s_minus / r * fs, -fs};
}

/// Time derivative of the moment vector with the source already in its
/// stationary state, evaluated at rotating-frame phase theta. Agrees with
/// (A + W(theta)) x + b(theta) component by component; that agreement is the
/// consistency check pinning the matrix constructors.
inline StateVector equations_rhs(const StateVector& x, const SystemParams& params,
                                 double theta) {
  const DriveAmplitudes d = drive_amplitudes(params, theta);
  const SourceAverages src = stationary_source_averages(d, params.r());
  return cascaded_moments_rhs(x, d, params.r(), params.alpha(), src.minus,
                              src.plus, src.z);
}

/// Source Bloch equations in tau = gamma_pr * t:
///   d<sm_s> = s+ <sz_s> - (r/2) <sm_s>
///   d<sp_s> = s- <sz_s> - (r/2) <sp_s>
///   d<sz_s> = -2 s+ <sp_s> - 2 s- <sm_s> - r <sz_s> - r
inline void source_bloch_rhs(const DriveAmplitudes& d, double r, Complex src_minus,
                             Complex src_plus, Complex src_z, Complex& d_minus,
                             Complex& d_plus, Complex& d_z) {
  d_minus = d.s_plus * src_z - 0.5 * r * src_minus;
  d_plus = d.s_minus * src_z - 0.5 * r * src_plus;
  d_z = -2.0 * d.s_plus * src_plus - 2.0 * d.s_minus * src_minus - r * src_z - r;
}

}  // namespace qwm
