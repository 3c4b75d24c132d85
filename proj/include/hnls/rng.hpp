#pragma once

// Portable seeded randomness.
//
// Streams are std::mt19937_64 (fully specified by the standard) seeded with
// a SplitMix64 mix of (seed, tag1, tag2). Uniforms take the top 53 bits of a
// draw; normals use Box-Muller on two uniforms. Standard-library
// distributions are avoided because their algorithms are unspecified.

#include <cmath>
#include <cstdint>
#include <random>

#include "hnls/spectrum.hpp"

namespace hnls {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t tag1 = 0, std::uint64_t tag2 = 0)
      : engine_(splitmix64(splitmix64(splitmix64(seed) ^ tag1) ^ tag2)) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (first branch only, no caching).
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class Ensemble { unimodular, gaussian, extremizer };

inline std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::unimodular: return "unimodular";
    case Ensemble::gaussian: return "gaussian";
    case Ensemble::extremizer: return "extremizer";
  }
  return "?";
}

inline Ensemble parse_ensemble(std::string_view name) {
  if (name == "unimodular") return Ensemble::unimodular;
  if (name == "gaussian") return Ensemble::gaussian;
  if (name == "extremizer") return Ensemble::extremizer;
  throw ValidationError("unknown ensemble '" + std::string(name) + "'");
}

/// Random coefficients on every frequency of centre + (-N, N]^2, drawn in
/// lexicographic (n1, n2) order.
///   unimodular: e^{2 pi i U}
///   gaussian:   (X + iY) / sqrt(2)
inline FourierCoeffs random_field(i64 half_width, Ensemble ensemble, Rng& rng, FreqPoint centre = {}) {
  require(ensemble != Ensemble::extremizer, "random_field: extremizer is deterministic");
  const i64 box = enclosing_half_width(std::vector<FreqPoint>{centre + FreqPoint{half_width, half_width},
                                                              centre - FreqPoint{half_width - 1, half_width - 1}});
  FourierCoeffs c(box);
  for (i64 n1 = -half_width + 1; n1 <= half_width; ++n1) {
    for (i64 n2 = -half_width + 1; n2 <= half_width; ++n2) {
      Complex v;
      if (ensemble == Ensemble::unimodular) {
        v = std::polar(1.0, kTwoPi * rng.uniform());
      } else {
        const double re = rng.normal();
        const double im = rng.normal();
        v = Complex{re, im} / std::sqrt(2.0);
      }
      c.set(centre + FreqPoint{n1, n2}, v);
    }
  }
  return c;
}

}  // namespace hnls
