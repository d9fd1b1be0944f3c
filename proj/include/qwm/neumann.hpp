#pragma once

#include <vector>

#include "qwm/cascaded_system.hpp"
#include "qwm/drive_series.hpp"
#include "qwm/params.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Hard cap on the expansion order; beyond this the monomial count (and the
/// usefulness of a divergent weak-drive series) no longer justifies the run.
inline constexpr int kMaxNeumannOrder = 12;

inline MonomialKey unit_monomial(DriveFactor f) {
  switch (f) {
    case DriveFactor::PMinus: return MonomialKey{1, 0, 0, 0};
    case DriveFactor::PPlus: return MonomialKey{0, 1, 0, 0};
    case DriveFactor::SPlus: return MonomialKey{0, 0, 1, 0};
    case DriveFactor::SMinus: return MonomialKey{0, 0, 0, 1};
  }
  return MonomialKey{};
}

/// W applied symbolically to a series-valued state, entry by entry over the
/// 28 nonzero drive-matrix entries (each a single monomial times +-1 or +-2).
inline SeriesStateVector apply_drive_matrix(const SeriesStateVector& x) {
  SeriesStateVector y = make_series_state(x[0].truncation_order());
  for (const auto& e : drive_matrix_entries()) {
    y[e.row] = series_add(
        y[e.row], series_scale_mul(x[e.col], unit_monomial(e.factor), e.coeff));
  }
  return y;
}

/// Order-N slice of the inhomogeneous vector b. The saturation factor
/// F_s = 1/(1 + 8 s+ s-/r^2) expands in even orders (-8/r^2)^k (s+ s-)^k;
/// entries 1 and 4 carry it times (2/r) s+- (odd total orders), entry 11
/// carries it bare (even orders), and entry 8 is the order-0 ground-state
/// feed.
inline SeriesStateVector drive_vector_layer(int n, int truncation_order, double r) {
  SeriesStateVector b = make_series_state(truncation_order);
  if (n == 0) {
    b[moment::pr_z].add_term(kConstantMonomial, Complex(-1.0, 0.0));
    b[moment::zz].add_term(kConstantMonomial, Complex(1.0, 0.0));
    return b;
  }
  const double fs_ratio = -8.0 / (r * r);
  if (n % 2 == 0) {
    const int k = n / 2;
    b[moment::zz].add_term(MonomialKey{0, 0, k, k}, std::pow(fs_ratio, k));
  } else {
    const int k = (n - 1) / 2;
    const double coeff = (2.0 / r) * std::pow(fs_ratio, k);
    b[moment::sm_z].add_term(MonomialKey{0, 0, k + 1, k}, coeff);
    b[moment::sp_z].add_term(MonomialKey{0, 0, k, k + 1}, coeff);
  }
  return b;
}

/// Weak-drive Taylor expansion of the stationary solution, generated by the
/// recursion X^[N] = -A^{-1} (W X^[N-1] + b^[N]) with X^[0] = -A^{-1} b^[0].
///
/// Layer N holds exactly the total-order-N monomials; `cumulative` is their
/// sum. Coefficients are numeric at fixed (r, alpha); closed-form r
/// dependence is checked pointwise in the tests rather than symbolically.
struct NeumannExpansion {
  std::vector<SeriesStateVector> layers;
  SeriesStateVector cumulative;
  double r = 1.0;
  double alpha = 1.0;
  int order = 0;

  const DriveSeries& component(int i) const { return cumulative.at(i); }
  const DriveSeries& layer_component(int n, int i) const { return layers.at(n).at(i); }
};

inline NeumannExpansion expand(const SystemParams& params, int order) {
  params.validate();
  if (order < 0) throw ConfigError("expansion order must be non-negative");
  if (order > kMaxNeumannOrder)
    throw ConfigError("expansion order exceeds cap " + std::to_string(kMaxNeumannOrder));

  const double r = params.r();
  // A is drive independent; factor once and reuse across orders.
  const ComplexMatrix a = build_A(params).cast<Complex>();
  const Eigen::PartialPivLU<ComplexMatrix> lu(a);

  NeumannExpansion exp;
  exp.r = r;
  exp.alpha = params.alpha();
  exp.order = order;
  exp.cumulative = make_series_state(order);

  for (int n = 0; n <= order; ++n) {
    SeriesStateVector rhs = drive_vector_layer(n, order, r);
    if (n > 0) {
      const SeriesStateVector coupled = apply_drive_matrix(exp.layers[n - 1]);
      for (int i = 0; i < 12; ++i) rhs[i] = series_add(rhs[i], coupled[i]);
    }

    // Group the right-hand side by monomial and solve A z = -v once per key.
    std::map<MonomialKey, ComplexVector> columns;
    for (int i = 0; i < 12; ++i) {
      for (const auto& [key, value] : rhs[i].terms()) {
        auto [it, inserted] = columns.try_emplace(key, ComplexVector::Zero());
        it->second[i] += value;
      }
    }

    SeriesStateVector layer = make_series_state(order);
    for (const auto& [key, v] : columns) {
      const ComplexVector z = lu.solve((-v).eval());
      for (int i = 0; i < 12; ++i) layer[i].add_term(key, z[i]);
    }
    exp.layers.push_back(layer);
    for (int i = 0; i < 12; ++i)
      exp.cumulative[i] = series_add(exp.cumulative[i], layer[i]);
  }
  return exp;
}

/// Coefficient of one monomial in one moment of the cumulative expansion.
inline Complex sideband_coefficient(const NeumannExpansion& exp, int component,
                                    const MonomialKey& key) {
  if (key.total_order() > exp.order)
    throw ConfigError("monomial order exceeds the expansion truncation");
  return exp.component(component).coeff(key);
}

/// Coefficient of e^{i n delta_omega t} in <sigma_-^pr>, evaluated from the
/// truncated series at the given drive components.
inline Complex peak_amplitude_perturbative(const NeumannExpansion& exp, int n,
                                           const DriveAmplitudes& d) {
  if (std::abs(n) > exp.order)
    throw ConfigError("harmonic index exceeds the expansion truncation");
  return evaluate(harmonic_component(exp.component(moment::pr_minus), n), d);
}

}  // namespace qwm
