#pragma once

#include <cmath>
#include <string_view>

#include "hnls/spectrum.hpp"

namespace hnls {

/// Dispersion symbol of the free flow. The elliptic one is kept as a control.
enum class Symbol { hyperbolic, elliptic };

constexpr i64 symbol_value(Symbol kind, FreqPoint n) {
  return kind == Symbol::hyperbolic ? hyperbolic_symbol(n) : norm_sq(n);
}

constexpr std::string_view to_string(Symbol kind) {
  return kind == Symbol::hyperbolic ? "hyperbolic" : "elliptic";
}

inline Symbol parse_symbol(std::string_view name) {
  if (name == "hyperbolic") return Symbol::hyperbolic;
  if (name == "elliptic") return Symbol::elliptic;
  throw ValidationError("unknown symbol '" + std::string(name) + "'");
}

/// e^{-2 pi i sigma t}, with sigma*t reduced mod 1 first so integer times give exactly 1.
///
/// Shared by evolve_linear and the split-step solver's linear substep.
inline Complex phase_factor(i64 sigma, double t) {
  const double x = static_cast<double>(sigma) * t;
  const double frac = x - std::floor(x);
  if (frac == 0.0) return {1.0, 0.0};
  return std::polar(1.0, -kTwoPi * frac);
}

/// Free flow e^{it Box}: each amplitude times e^{-2 pi i symbol(n) t}.
inline FourierCoeffs evolve_linear(const FourierCoeffs& c, double t, Symbol kind = Symbol::hyperbolic) {
  FourierCoeffs out(c.half_width());
  for (const auto& [n, v] : c.entries()) out.set(n, v * phase_factor(symbol_value(kind, n), t));
  return out;
}

inline void evolve_linear_inplace(DenseCoeffs& c, double t, Symbol kind = Symbol::hyperbolic) {
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == Complex{}) continue;
    c.values[i] *= phase_factor(symbol_value(kind, c.point(i)), t);
  }
}

/// Space-time coefficients of e^{it Box} f on [0,1] x T^2: each mode n sits
/// at time frequency m = -S(n), i.e. on the characteristic surface.
inline SpaceTimeCoeffs free_wave_spacetime(const FourierCoeffs& c, Symbol kind = Symbol::hyperbolic) {
  SpaceTimeCoeffs u;
  for (const auto& [n, v] : c.entries()) u.set({-symbol_value(kind, n), n}, v);
  return u;
}

/// Frequency projection onto a + (-N, N]^2.
inline FourierCoeffs project_box(const FourierCoeffs& c, FreqPoint a, i64 half_width) {
  require(half_width >= 1, "project_box: half-width must be positive");
  FourierCoeffs out(c.half_width());
  for (const auto& [n, v] : c.entries())
    if (in_box(n - a, half_width)) out.set(n, v);
  return out;
}

/// Reflected dual (m1, -m2); H(n) = n . dual_reflect(n).
constexpr FreqPoint dual_reflect(FreqPoint m) { return {m.n1, -m.n2}; }

/// Translates the spectrum by -m: g^(n - m) = f^(n). The result lives in the
/// smallest box containing the shifted support.
///
/// Under the hyperbolic Galilean identity
///   x.n + t H(n) = x.m + t H(m) + (x + 2t dual(m)).(n - m) + t H(n - m)
/// the space-time L^4 norm of the free evolution is unchanged by this shift.
inline FourierCoeffs recentre(const FourierCoeffs& c, FreqPoint m) {
  std::vector<FreqPoint> shifted;
  shifted.reserve(c.size());
  for (const auto& [n, v] : c.entries()) shifted.push_back(n - m);
  FourierCoeffs out(enclosing_half_width(shifted));
  for (const auto& [n, v] : c.entries()) out.set(n - m, v);
  return out;
}

}  // namespace hnls
