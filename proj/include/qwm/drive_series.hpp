#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "qwm/params.hpp"
#include "qwm/types.hpp"

namespace qwm {

/// Exponents (a,b,c,d) of the drive monomial p_-^a p_+^b s_+^c s_-^d.
///
/// A monomial oscillates at harmonic n = -a + b + c - d of the detuning
/// delta_omega; total_order is the expansion order it contributes to.
struct MonomialKey {
  int a = 0;  ///< exponent of p_-
  int b = 0;  ///< exponent of p_+
  int c = 0;  ///< exponent of s_+
  int d = 0;  ///< exponent of s_-

  int total_order() const { return a + b + c + d; }
  int harmonic_index() const { return -a + b + c - d; }

  MonomialKey operator*(const MonomialKey& o) const {
    return MonomialKey{a + o.a, b + o.b, c + o.c, d + o.d};
  }

  auto operator<=>(const MonomialKey&) const = default;
};

inline const MonomialKey kConstantMonomial{};

/// Truncated polynomial in the four drive components with complex
/// coefficients. Keys above the truncation order are never stored;
/// coefficients below the prune threshold are dropped.
class DriveSeries {
 public:
  explicit DriveSeries(int truncation_order = 7, double prune_threshold = 1e-14)
      : truncation_order_(truncation_order), prune_threshold_(prune_threshold) {}

  int truncation_order() const { return truncation_order_; }
  double prune_threshold() const { return prune_threshold_; }
  const std::map<MonomialKey, Complex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Complex coeff(const MonomialKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
  }

  /// Accumulate into one coefficient, honoring truncation and pruning.
  void add_term(const MonomialKey& key, Complex value) {
    if (key.total_order() > truncation_order_) return;
    Complex& slot = terms_[key];
    slot += value;
    if (std::abs(slot) < prune_threshold_) terms_.erase(key);
  }

 private:
  std::map<MonomialKey, Complex> terms_;
  int truncation_order_;
  double prune_threshold_;
};

/// Coefficient-wise sum. The two operands must share a truncation order.
inline DriveSeries series_add(const DriveSeries& x, const DriveSeries& y) {
  if (x.truncation_order() != y.truncation_order())
    throw ConfigError("series_add: mismatched truncation orders");
  DriveSeries out = x;
  for (const auto& [key, value] : y.terms()) out.add_term(key, value);
  return out;
}

/// Multiply by coeff * (single monomial): every key is shifted by the
/// monomial's exponents; keys exceeding the truncation order are dropped.
inline DriveSeries series_scale_mul(const DriveSeries& x, const MonomialKey& mono,
                                    Complex coeff) {
  DriveSeries out(x.truncation_order(), x.prune_threshold());
  for (const auto& [key, value] : x.terms()) out.add_term(key * mono, coeff * value);
  return out;
}

/// Sub-series of the keys oscillating at harmonic n.
inline DriveSeries harmonic_component(const DriveSeries& x, int n) {
  DriveSeries out(x.truncation_order(), x.prune_threshold());
  for (const auto& [key, value] : x.terms())
    if (key.harmonic_index() == n) out.add_term(key, value);
  return out;
}

inline Complex pow_int(Complex base, int n) {
  Complex acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

inline Complex evaluate(const MonomialKey& key, const DriveAmplitudes& d) {
  return pow_int(d.p_minus, key.a) * pow_int(d.p_plus, key.b) *
         pow_int(d.s_plus, key.c) * pow_int(d.s_minus, key.d);
}

/// Numeric value of the series at given drive components.
inline Complex evaluate(const DriveSeries& x, const DriveAmplitudes& d) {
  Complex acc{0.0, 0.0};
  for (const auto& [key, value] : x.terms()) acc += value * evaluate(key, d);
  return acc;
}

/// One row of the exported monomial table.
struct SeriesTableRow {
  MonomialKey key;
  int harmonic;
  Complex coeff;
};

/// Rows sorted lexicographically by (total_order, a, b, c, d); this fixed
/// ordering keeps exported tables diffable.
inline std::vector<SeriesTableRow> table_rows(const DriveSeries& x) {
  std::vector<SeriesTableRow> rows;
  rows.reserve(x.size());
  for (const auto& [key, value] : x.terms())
    rows.push_back(SeriesTableRow{key, key.harmonic_index(), value});
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return std::tuple(l.key.total_order(), l.key.a, l.key.b, l.key.c, l.key.d) <
           std::tuple(r.key.total_order(), r.key.a, r.key.b, r.key.c, r.key.d);
  });
  return rows;
}

/// One DriveSeries per moment, sharing a truncation order.
using SeriesStateVector = std::array<DriveSeries, 12>;

inline SeriesStateVector make_series_state(int truncation_order) {
  SeriesStateVector s;
  s.fill(DriveSeries(truncation_order));
  return s;
}

}  // namespace qwm
