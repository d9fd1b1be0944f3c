#include <catch2/catch_amalgamated.hpp>

#include "qwm/neumann.hpp"
#include "qwm/stationary.hpp"

using namespace qwm;

namespace {

SystemParams params_r(double r, double mu = 1.0) {
  SystemParams p;
  p.gamma_s = r;
  p.gamma_pr = 1.0;
  p.mu = mu;
  return p;
}

void check_coeff(const NeumannExpansion& exp, const MonomialKey& key, double expected) {
  const Complex c = sideband_coefficient(exp, moment::pr_minus, key);
  INFO("key (" << key.a << "," << key.b << "," << key.c << "," << key.d << ") r=" << exp.r);
  CHECK(std::abs(c.imag()) < 1e-10 * (std::abs(expected) + 1.0));
  CHECK(c.real() == Catch::Approx(expected).epsilon(1e-10));
}

}  // namespace

TEST_CASE("zeroth layer is the vacuum") {
  const NeumannExpansion exp = expand(params_r(1.3, 0.7), 3);
  for (int i = 0; i < 12; ++i) {
    const Complex c = exp.layer_component(0, i).coeff(kConstantMonomial);
    if (i == moment::pr_z)
      CHECK(std::abs(c - Complex(-1.0, 0.0)) < 1e-14);
    else if (i == moment::zz)
      CHECK(std::abs(c - Complex(1.0, 0.0)) < 1e-14);
    else
      CHECK(std::abs(c) < 1e-14);
  }
}

TEST_CASE("layers are homogeneous in total order") {
  const NeumannExpansion exp = expand(params_r(0.8, 0.9), 5);
  for (int n = 0; n <= exp.order; ++n)
    for (int i = 0; i < 12; ++i)
      for (const auto& [key, value] : exp.layers[n][i].terms())
        REQUIRE(key.total_order() == n);
}

TEST_CASE("first-order coherence series") {
  for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const NeumannExpansion exp = expand(params_r(r), 1);
    const DriveSeries& x1 = exp.component(moment::pr_minus);
    REQUIRE(x1.size() == 2);
    check_coeff(exp, MonomialKey{1, 0, 0, 0}, -2.0);
    check_coeff(exp, MonomialKey{0, 0, 1, 0}, 4.0 * exp.alpha / r);
  }
}

TEST_CASE("third-order coherence coefficients match the printed expansion") {
  for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const NeumannExpansion exp = expand(params_r(r), 3);
    const double a = exp.alpha;
    check_coeff(exp, MonomialKey{2, 1, 0, 0}, 16.0);
    check_coeff(exp, MonomialKey{2, 0, 0, 1}, -32.0 * a / r);
    check_coeff(exp, MonomialKey{1, 1, 1, 0}, -64.0 * a / r);
    check_coeff(exp, MonomialKey{1, 0, 1, 1}, 128.0 * a * a / (r * r));
    check_coeff(exp, MonomialKey{0, 1, 2, 0}, 64.0 * a * a / (r * (r + 1.0)));
    check_coeff(exp, MonomialKey{0, 0, 2, 1},
                -32.0 * a * (4.0 * a * a * r + r + 1.0) / (r * r * r * (r + 1.0)));
    // No other third-order monomials contribute to the coherence.
    int order3 = 0;
    for (const auto& [key, value] : exp.component(moment::pr_minus).terms())
      if (key.total_order() == 3) ++order3;
    CHECK(order3 == 6);
  }
}

TEST_CASE("fifth-order sideband coefficients match the printed forms") {
  for (double r : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const NeumannExpansion exp = expand(params_r(r), 5);
    const double a = exp.alpha;
    check_coeff(exp, MonomialKey{3, 0, 0, 2},
                -256.0 * a * a * (2.0 * r + 3.0) / (r * (r + 1.0) * (r + 1.0)));
    check_coeff(exp, MonomialKey{0, 2, 3, 0},
                512.0 * a * a * a * (2.0 * r + 5.0) /
                    (r * (r + 1.0) * (r + 1.0) * (r + 2.0)));
  }
}

TEST_CASE("only odd orders drive the coherences, only even the inversions") {
  const NeumannExpansion exp = expand(params_r(1.6, 0.85), 6);
  for (int i = 0; i < 12; ++i) {
    const int parity = i < 6 ? 1 : 0;
    for (const auto& [key, value] : exp.component(i).terms())
      REQUIRE(key.total_order() % 2 == parity);
  }
}

TEST_CASE("even-order coherence coefficients vanish") {
  const NeumannExpansion exp = expand(params_r(0.7), 4);
  CHECK(sideband_coefficient(exp, moment::pr_minus, MonomialKey{1, 1, 0, 0}) ==
        Complex(0.0, 0.0));
  CHECK(sideband_coefficient(exp, moment::pr_minus, MonomialKey{0, 0, 1, 1}) ==
        Complex(0.0, 0.0));
  CHECK(sideband_coefficient(exp, moment::pr_minus, MonomialKey{2, 0, 1, 1}) ==
        Complex(0.0, 0.0));
}

TEST_CASE("coherence components are conjugate partners") {
  // coeff of p-^a p+^b s+^c s-^d in <s-pr> equals coeff of p-^b p+^a s+^d s-^c
  // in <s+pr>; with real (r, alpha) both are real.
  const NeumannExpansion exp = expand(params_r(2.3, 0.6), 5);
  for (const auto& [key, value] : exp.component(moment::pr_minus).terms()) {
    const MonomialKey swapped{key.b, key.a, key.d, key.c};
    const Complex partner = sideband_coefficient(exp, moment::pr_plus, swapped);
    REQUIRE(std::abs(value - std::conj(partner)) < 1e-10 * std::abs(value));
  }
}

TEST_CASE("perturbative peak amplitudes reduce to the leading formulas") {
  SystemParams p = params_r(1.9, 0.75);
  p.omega_pr = Complex(0.03, 0.01);
  p.omega_s = Complex(0.02, -0.015);
  const NeumannExpansion exp1 = expand(p, 1);
  const DriveAmplitudes d = drive_amplitudes(p, 0.0);

  const Complex minus1 = peak_amplitude_perturbative(exp1, -1, d);
  CHECK(std::abs(minus1 - (-2.0 * p.omega_pr / p.gamma_pr)) < 1e-14);

  const Complex plus1 = peak_amplitude_perturbative(exp1, +1, d);
  CHECK(std::abs(plus1 - 4.0 * p.alpha() * p.omega_s / p.gamma_s) < 1e-14);

  const NeumannExpansion exp3 = expand(p, 3);
  const Complex minus3 = peak_amplitude_perturbative(exp3, -3, d);
  const Complex expected3 = -32.0 * p.alpha() * p.omega_pr * p.omega_pr *
                            std::conj(p.omega_s) /
                            (p.gamma_s * p.gamma_pr * p.gamma_pr);
  CHECK(std::abs(minus3 - expected3) < 1e-12 * std::abs(expected3));
}

TEST_CASE("expansion order is capped and inputs validated") {
  CHECK_THROWS_AS(expand(params_r(1.0), -1), ConfigError);
  CHECK_THROWS_AS(expand(params_r(1.0), kMaxNeumannOrder + 1), ConfigError);
  const NeumannExpansion exp = expand(params_r(1.0), 3);
  CHECK_THROWS_AS(sideband_coefficient(exp, 0, MonomialKey{2, 2, 0, 0}), ConfigError);
  CHECK_THROWS_AS(peak_amplitude_perturbative(exp, 5, DriveAmplitudes{}), ConfigError);
}

TEST_CASE("truncation error scales as drive^(N+2)") {
  // Generic parameter point; complex drive phases avoid accidental
  // cancellations. E(eps) = |exact - neumann:N| should fall by 2^(N+2) when
  // the drives are halved (odd series: the first omitted order is N+2).
  SystemParams p = params_r(1.7, 0.9);
  p.omega_pr = std::polar(0.04, 0.3);
  p.omega_s = std::polar(0.03, -0.7);

  auto exact_amp = [](const SystemParams& q, int n) {
    SpectrumOptions opt;
    opt.max_harmonic = 5;
    return extract_spectrum(q, opt).amplitude(n);
  };

  // A truncated series has no content beyond its order: the perturbative
  // amplitude for |n| > N is zero, e.g. the +-3 peaks at N=1.
  auto pert_amp = [](const NeumannExpansion& exp, int n, const DriveAmplitudes& d) {
    return std::abs(n) <= exp.order ? peak_amplitude_perturbative(exp, n, d)
                                    : Complex{0.0, 0.0};
  };

  for (int order : {1, 3, 5}) {
    const NeumannExpansion full = expand(p, order);
    const NeumannExpansion half = expand(p.scaled_drives(0.5), order);
    for (int n : {-1, +1, -3, +3}) {
      const double e_full =
          std::abs(exact_amp(p, n) - pert_amp(full, n, drive_amplitudes(p, 0.0)));
      const double e_half = std::abs(
          exact_amp(p.scaled_drives(0.5), n) -
          pert_amp(half, n, drive_amplitudes(p.scaled_drives(0.5), 0.0)));
      REQUIRE(e_half > 0.0);
      const double ratio = e_full / e_half;
      const double expected = std::pow(2.0, order + 2);
      INFO("order " << order << " harmonic " << n << " ratio " << ratio);
      CHECK(ratio > expected / 1.5);
      CHECK(ratio < expected * 1.5);
    }
  }
}
