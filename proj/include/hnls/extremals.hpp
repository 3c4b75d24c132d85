#pragma once

#include <cmath>

#include "hnls/resonance.hpp"

namespace hnls {

enum class Normalization {
  unit_amplitudes,  // every diagonal amplitude 1
  mass_normalized,  // every diagonal amplitude N^{-1/2}
};

struct DiagonalSpec {
  i64 n = 1;
  Normalization normalization = Normalization::unit_amplitudes;
};

/// phi_N: equal amplitudes on the diagonal {(k, k) : |k| <= N}.
///
/// The diagonal reaches (-N, -N), so the coefficients live in the box of
/// half-width N + 1. Every diagonal frequency has H = 0, hence the free
/// hyperbolic flow leaves phi_N fixed.
inline FourierCoeffs make_phi(const DiagonalSpec& spec) {
  require(spec.n >= 0, "make_phi: N must be nonnegative");
  require(spec.normalization == Normalization::unit_amplitudes || spec.n >= 1,
          "make_phi: mass normalisation needs N >= 1");
  const double amp =
      spec.normalization == Normalization::unit_amplitudes ? 1.0 : 1.0 / std::sqrt(static_cast<double>(spec.n));
  FourierCoeffs phi(spec.n + 1);
  for (i64 k = -spec.n; k <= spec.n; ++k) phi.set({k, k}, amp);
  return phi;
}

/// sum_{j=-2N}^{2N} (2N + 1 - |j|)^2: the fourth power of ||phi_N||_{L^4(T^2)}, unit amplitudes.
constexpr i64 phi_l4_fourth_power(i64 n) {
  i64 total = 0;
  for (i64 j = -2 * n; j <= 2 * n; ++j) {
    const i64 c = 2 * n + 1 - (j < 0 ? -j : j);
    total += c * c;
  }
  return total;
}

inline double phi_l4_closed_form(i64 n) {
  require(n >= 0, "phi_l4_closed_form: N must be nonnegative");
  return std::pow(static_cast<double>(phi_l4_fourth_power(n)), 0.25);
}

/// ||e^{it Box} f||_{L^4([0,1] x T^2)} / ||f||_{L^2}.
inline double strichartz_ratio(const FourierCoeffs& c, Symbol kind = Symbol::hyperbolic) {
  const double l2 = l2_norm(c);
  require(l2 > 0.0, "strichartz_ratio: zero field");
  return l4_spacetime_exact(c, kind) / l2;
}

}  // namespace hnls
