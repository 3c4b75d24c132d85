#pragma once

// Field representations on the unit torus T^2 = R^2 / Z^2 and their norms.
//
// Conventions: f(x) = sum_n c(n) e^{2 pi i n.x}, c(n) = int_T2 f e^{-2 pi i n.x} dx,
// n in Z^2. A box of half-width N is the half-open square (-N, N]^2.

#include <cmath>
#include <cstddef>
#include <iostream>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hnls/fft.hpp"
#include "hnls/types.hpp"

namespace hnls {

constexpr bool in_box(FreqPoint n, i64 half_width) {
  return n.n1 > -half_width && n.n1 <= half_width && n.n2 > -half_width && n.n2 <= half_width;
}

/// Smallest half-width N >= 1 such that every listed frequency lies in (-N, N]^2.
template <class Range>
i64 enclosing_half_width(const Range& points) {
  i64 n = 1;
  for (const FreqPoint& p : points) {
    for (i64 c : {p.n1, p.n2}) n = std::max(n, c > 0 ? c : 1 - c);
  }
  return n;
}

/// Sparse Fourier coefficients supported in (-N, N]^2. Absent entries are zero.
class FourierCoeffs {
 public:
  using Map = std::map<FreqPoint, Complex>;

  explicit FourierCoeffs(i64 half_width) : half_width_(half_width) {
    require(half_width >= 1, "box half-width must be positive");
    require(half_width < (i64{1} << 30), "box half-width too large for 64-bit levels");
  }

  i64 half_width() const { return half_width_; }
  bool contains(FreqPoint n) const { return in_box(n, half_width_); }

  /// Stores an amplitude; an exact zero erases the entry.
  void set(FreqPoint n, Complex value) {
    if (!contains(n))
      throw ValidationError("frequency (" + std::to_string(n.n1) + "," + std::to_string(n.n2) +
                            ") outside box of half-width " + std::to_string(half_width_));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw ValidationError("non-finite amplitude");
    if (value == Complex{}) {
      entries_.erase(n);
    } else {
      entries_[n] = value;
    }
  }

  void add(FreqPoint n, Complex value) { set(n, at(n) + value); }

  Complex at(FreqPoint n) const {
    const auto it = entries_.find(n);
    return it == entries_.end() ? Complex{} : it->second;
  }

  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<FreqPoint> support() const {
    std::vector<FreqPoint> out;
    out.reserve(entries_.size());
    for (const auto& [n, v] : entries_) out.push_back(n);
    return out;
  }

  /// Same entries in a box of another half-width; throws if the support does not fit.
  FourierCoeffs reboxed(i64 half_width) const {
    FourierCoeffs out(half_width);
    for (const auto& [n, v] : entries_) out.set(n, v);
    return out;
  }

  FourierCoeffs scaled(Complex lambda) const {
    FourierCoeffs out(half_width_);
    for (const auto& [n, v] : entries_) out.set(n, lambda * v);
    return out;
  }

 private:
  i64 half_width_;
  Map entries_;
};

/// Dense coefficients over the full box (-N, N]^2, row-major in (n1, n2).
struct DenseCoeffs {
  i64 half_width = 1;
  std::vector<Complex> values;

  DenseCoeffs() = default;
  explicit DenseCoeffs(i64 n) : half_width(n), values(static_cast<std::size_t>(4 * n * n)) {
    require(n >= 1, "box half-width must be positive");
  }

  i64 side() const { return 2 * half_width; }
  std::size_t index(FreqPoint n) const {
    return static_cast<std::size_t>((n.n1 + half_width - 1) * side() + (n.n2 + half_width - 1));
  }
  FreqPoint point(std::size_t idx) const {
    const i64 i = static_cast<i64>(idx);
    return {i / side() - half_width + 1, i % side() - half_width + 1};
  }
  Complex& operator[](FreqPoint n) { return values[index(n)]; }
  Complex operator[](FreqPoint n) const { return values[index(n)]; }
};

inline DenseCoeffs to_dense(const FourierCoeffs& c) {
  DenseCoeffs d(c.half_width());
  for (const auto& [n, v] : c.entries()) d[n] = v;
  return d;
}

inline FourierCoeffs to_sparse(const DenseCoeffs& d) {
  FourierCoeffs c(d.half_width);
  for (std::size_t i = 0; i < d.values.size(); ++i)
    if (d.values[i] != Complex{}) c.set(d.point(i), d.values[i]);
  return c;
}

/// Samples on the uniform M x M grid; values[j*M + k] is the field at (j/M, k/M).
struct GridField {
  std::size_t m = 1;
  std::vector<Complex> values;

  GridField() : values(1) {}
  explicit GridField(std::size_t samples) : m(samples), values(samples * samples) {
    require(samples >= 1, "grid size must be positive");
  }

  Complex& operator()(std::size_t j, std::size_t k) { return values[j * m + k]; }
  Complex operator()(std::size_t j, std::size_t k) const { return values[j * m + k]; }

  bool finite() const {
    for (const Complex& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

// --- transforms --------------------------------------------------------------

/// Loads dense box coefficients into an FFT buffer at wrapped indices.
inline void scatter_to_grid(const DenseCoeffs& c, Fft2d& fft) {
  const i64 m = static_cast<i64>(fft.size());
  auto buf = fft.data();
  std::fill(buf.begin(), buf.end(), Complex{});
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == Complex{}) continue;
    const FreqPoint n = c.point(i);
    buf[static_cast<std::size_t>(wrap_index(n.n1, m) * m + wrap_index(n.n2, m))] += c.values[i];
  }
}

/// Reads box coefficients back from a forward-transformed buffer (scaled by 1/M^2).
inline DenseCoeffs gather_from_grid(const Fft2d& fft, i64 half_width) {
  const i64 m = static_cast<i64>(fft.size());
  const double scale = 1.0 / static_cast<double>(m * m);
  auto buf = fft.data();
  DenseCoeffs c(half_width);
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const FreqPoint n = c.point(i);
    c.values[i] = buf[static_cast<std::size_t>(wrap_index(n.n1, m) * m + wrap_index(n.n2, m))] * scale;
  }
  return c;
}

inline GridField synthesize(const DenseCoeffs& c, std::size_t m) {
  require(static_cast<i64>(m) >= 2 * c.half_width,
          "synthesize: grid size M=" + std::to_string(m) + " below 2N=" + std::to_string(2 * c.half_width));
  Fft2d fft(m);
  scatter_to_grid(c, fft);
  fft.backward();
  GridField g(m);
  std::copy(fft.data().begin(), fft.data().end(), g.values.begin());
  return g;
}

/// Samples sum_n c(n) e^{2 pi i n.x} at x = (j/M, k/M). Requires M >= 2N.
inline GridField synthesize(const FourierCoeffs& c, std::size_t m) { return synthesize(to_dense(c), m); }

inline DenseCoeffs analyze_dense(const GridField& g, i64 half_width) {
  require(half_width >= 1, "analyze: half-width must be positive");
  require(static_cast<i64>(g.m) >= 2 * half_width,
          "analyze: grid size M=" + std::to_string(g.m) + " below 2N=" + std::to_string(2 * half_width));
  Fft2d fft(g.m);
  std::copy(g.values.begin(), g.values.end(), fft.data().begin());
  fft.forward();
  return gather_from_grid(fft, half_width);
}

/// Discrete Fourier coefficients on (-N, N]^2; inverse of synthesize on band-limited fields.
inline FourierCoeffs analyze(const GridField& g, i64 half_width) { return to_sparse(analyze_dense(g, half_width)); }

// --- norms -------------------------------------------------------------------

inline double l2_norm(const FourierCoeffs& c) {
  double sum = 0.0;
  for (const auto& [n, v] : c.entries()) sum += std::norm(v);
  return std::sqrt(sum);
}

/// ||a - b||_{l^2} over the union of the supports.
inline double l2_distance(const FourierCoeffs& a, const FourierCoeffs& b) {
  double sum = 0.0;
  for (const auto& [n, v] : a.entries()) sum += std::norm(v - b.at(n));
  for (const auto& [n, v] : b.entries())
    if (a.entries().find(n) == a.entries().end()) sum += std::norm(v);
  return std::sqrt(sum);
}

/// Sobolev weight (1 + |n|^2)^{s/2}, the spatial factor of the X^{s,b} weight.
inline double sobolev_weight(FreqPoint n, double s) {
  return std::pow(1.0 + static_cast<double>(norm_sq(n)), 0.5 * s);
}

inline double hs_norm(const FourierCoeffs& c, double s) {
  double sum = 0.0;
  for (const auto& [n, v] : c.entries()) sum += std::pow(1.0 + static_cast<double>(norm_sq(n)), s) * std::norm(v);
  return std::sqrt(sum);
}

/// True when the uniform M-point rule integrates |u|^p exactly for u band-limited to half-width N.
constexpr bool lp_quadrature_exact(std::size_t m, int p, i64 half_width) {
  return static_cast<i64>(m) >= p * half_width + 1;
}

/// (M^{-2} sum |u|^p)^{1/p} for even p.
inline double lp_spatial_norm(const GridField& g, int p) {
  require(p >= 2 && p % 2 == 0, "lp_spatial_norm: p must be an even positive integer");
  double sum = 0.0;
  const int half = p / 2;
  for (const Complex& v : g.values) {
    const double a = std::norm(v);
    double t = 1.0;
    for (int i = 0; i < half; ++i) t *= a;
    sum += t;
  }
  return std::pow(sum / static_cast<double>(g.values.size()), 1.0 / p);
}

/// As above, with an advisory on stderr when the rule is not exact for the claimed band limit.
inline double lp_spatial_norm(const GridField& g, int p, i64 band_half_width) {
  if (!lp_quadrature_exact(g.m, p, band_half_width))
    std::clog << "hnls: advisory: M=" << g.m << " < pN+1=" << p * band_half_width + 1
              << "; L^" << p << " quadrature is approximate\n";
  return lp_spatial_norm(g, p);
}

/// Exact spatial L^p norm (p even) of a trigonometric polynomial.
inline double lp_norm_exact(const FourierCoeffs& c, int p) {
  const auto m = good_fft_size(static_cast<std::size_t>(p * c.half_width() + 1));
  return lp_spatial_norm(synthesize(c, m), p);
}

// --- space-time ----------------------------------------------------------------

struct SpaceTimePoint {
  i64 m = 0;  // time frequency
  FreqPoint n;
  friend constexpr auto operator<=>(const SpaceTimePoint&, const SpaceTimePoint&) = default;
};

/// Finitely supported space-time coefficients u^(m, n) on T x T^2.
class SpaceTimeCoeffs {
 public:
  void set(SpaceTimePoint p, Complex value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw ValidationError("non-finite space-time amplitude");
    if (value == Complex{}) {
      entries_.erase(p);
    } else {
      entries_[p] = value;
    }
  }
  void add(SpaceTimePoint p, Complex value) {
    const auto it = entries_.find(p);
    set(p, (it == entries_.end() ? Complex{} : it->second) + value);
  }
  const std::map<SpaceTimePoint, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<SpaceTimePoint, Complex> entries_;
};

/// H(n) = n1^2 - n2^2.
constexpr i64 hyperbolic_symbol(FreqPoint n) { return n.n1 * n.n1 - n.n2 * n.n2; }

/// Bourgain norm with weight (1 + |m + H(n)|)^b (1 + |n|^2)^{s/2}.
inline double xsb_norm(const SpaceTimeCoeffs& u, double s, double b) {
  double sum = 0.0;
  for (const auto& [p, v] : u.entries()) {
    const double modulation = 1.0 + std::abs(static_cast<double>(p.m + hyperbolic_symbol(p.n)));
    const double w = std::pow(modulation, b) * sobolev_weight(p.n, s);
    sum += w * w * std::norm(v);
  }
  return std::sqrt(sum);
}

}  // namespace hnls
