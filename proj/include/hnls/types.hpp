#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace hnls {

using i64 = std::int64_t;
using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// A point of the integer frequency lattice Z^2.
struct FreqPoint {
  i64 n1 = 0;
  i64 n2 = 0;

  friend constexpr auto operator<=>(const FreqPoint&, const FreqPoint&) = default;

  friend constexpr FreqPoint operator+(FreqPoint a, FreqPoint b) { return {a.n1 + b.n1, a.n2 + b.n2}; }
  friend constexpr FreqPoint operator-(FreqPoint a, FreqPoint b) { return {a.n1 - b.n1, a.n2 - b.n2}; }
  friend constexpr FreqPoint operator-(FreqPoint a) { return {-a.n1, -a.n2}; }
};

constexpr i64 dot(FreqPoint a, FreqPoint b) { return a.n1 * b.n1 + a.n2 * b.n2; }
constexpr i64 norm_sq(FreqPoint n) { return dot(n, n); }

/// Raised for malformed inputs; the CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation produces NaN/Inf; the CLI maps it to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

/// Floor modulus, result in [0, m).
constexpr i64 wrap_index(i64 n, i64 m) {
  const i64 r = n % m;
  return r < 0 ? r + m : r;
}

}  // namespace hnls

template <>
struct std::hash<hnls::FreqPoint> {
  std::size_t operator()(const hnls::FreqPoint& p) const noexcept {
    const auto a = static_cast<std::uint64_t>(p.n1);
    const auto b = static_cast<std::uint64_t>(p.n2);
    return static_cast<std::size_t>(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2)));
  }
};
