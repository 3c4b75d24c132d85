#pragma once

// Exact space-time norms of products of free waves by resonance binning.
//
// For free waves u_i = e^{i sigma_i t Box} phi_i on [0,1] x T^2,
//   u_1 u_2 (t, x) = sum_{a,k} [ sum_{n+m=a, sigma_1 S(n) + sigma_2 S(m) = k} c_1(n) c_2(m) ] e^{2 pi i (a.x - k t)},
// so by Plancherel in (t, x) its squared L^2 norm is the sum over bins (a, k)
// of |bin|^2. Everything here reduces to that sum.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "hnls/parallel.hpp"
#include "hnls/propagator.hpp"
#include "hnls/spectrum.hpp"

namespace hnls {

enum class Sign { plus, minus };

namespace detail {

struct BinOperand {
  struct Term {
    FreqPoint n;
    Complex value;
    i64 phase;  // sigma * S(n)
  };
  std::vector<Term> terms;  // lexicographic in (n1, n2)
  i64 lo1 = 0, hi1 = -1, lo2 = 0, hi2 = -1;
  i64 kmin = 0, kmax = 0;

  i64 width() const { return hi1 - lo1 + 1; }
  i64 height() const { return hi2 - lo2 + 1; }
};

inline BinOperand make_operand(const FourierCoeffs& c, int sigma, Symbol kind) {
  BinOperand op;
  op.terms.reserve(c.size());
  bool first = true;
  for (const auto& [n, v] : c.entries()) {
    const i64 phase = sigma * symbol_value(kind, n);
    op.terms.push_back({n, v, phase});
    if (first) {
      op.lo1 = op.hi1 = n.n1;
      op.lo2 = op.hi2 = n.n2;
      op.kmin = op.kmax = phase;
      first = false;
    } else {
      op.lo1 = std::min(op.lo1, n.n1);
      op.hi1 = std::max(op.hi1, n.n1);
      op.lo2 = std::min(op.lo2, n.n2);
      op.hi2 = std::max(op.hi2, n.n2);
      op.kmin = std::min(op.kmin, phase);
      op.kmax = std::max(op.kmax, phase);
    }
  }
  return op;
}

/// Per-worker scratch for one output frequency a: a dense accumulator over k
/// plus the list of touched slots so the reset costs only what was used.
struct LevelAccumulator {
  std::vector<Complex> bins;
  std::vector<char> seen;
  std::vector<std::size_t> touched;

  void prepare(std::size_t size) {
    if (bins.size() < size) {
      bins.assign(size, Complex{});
      seen.assign(size, 0);
    }
  }
  void add(std::size_t k, Complex v) {
    if (!seen[k]) {
      seen[k] = 1;
      touched.push_back(k);
    }
    bins[k] += v;
  }
  double drain() {
    double e = 0.0;
    for (std::size_t k : touched) {
      e += std::norm(bins[k]);
      bins[k] = Complex{};
      seen[k] = 0;
    }
    touched.clear();
    return e;
  }
};

/// Bounding-box kernel: for each output frequency a, walks the overlap of the
/// two boxes and bins by k in a dense buffer. Cost ~ area_1 * area_2.
inline double bin_energy_dense(const BinOperand& p, const BinOperand& q) {
  const i64 w1 = p.width(), h1 = p.height(), w2 = q.width(), h2 = q.height();
  std::vector<Complex> a1(static_cast<std::size_t>(w1 * h1)), a2(static_cast<std::size_t>(w2 * h2));
  std::vector<i64> k1(a1.size()), k2(a2.size());
  for (const auto& t : p.terms) {
    const auto i = static_cast<std::size_t>((t.n.n1 - p.lo1) * h1 + (t.n.n2 - p.lo2));
    a1[i] = t.value;
    k1[i] = t.phase;
  }
  for (const auto& t : q.terms) {
    const auto i = static_cast<std::size_t>((t.n.n1 - q.lo1) * h2 + (t.n.n2 - q.lo2));
    a2[i] = t.value;
    k2[i] = t.phase;
  }
  const i64 kmin = p.kmin + q.kmin;
  const auto krange = static_cast<std::size_t>(p.kmax + q.kmax - kmin + 1);
  const i64 ax_lo = p.lo1 + q.lo1, ax_hi = p.hi1 + q.hi1;
  const i64 ay_lo = p.lo2 + q.lo2, ay_hi = p.hi2 + q.hi2;

  std::vector<double> per_row(static_cast<std::size_t>(ax_hi - ax_lo + 1));
  parallel_for(per_row.size(), [&](std::size_t row) {
    thread_local LevelAccumulator acc;
    acc.prepare(krange);
    const i64 ax = ax_lo + static_cast<i64>(row);
    const i64 x_lo = std::max(p.lo1, ax - q.hi1), x_hi = std::min(p.hi1, ax - q.lo1);
    double row_energy = 0.0;
    for (i64 ay = ay_lo; ay <= ay_hi; ++ay) {
      const i64 y_lo = std::max(p.lo2, ay - q.hi2), y_hi = std::min(p.hi2, ay - q.lo2);
      for (i64 x = x_lo; x <= x_hi; ++x) {
        const i64 base1 = (x - p.lo1) * h1 - p.lo2;
        const i64 base2 = (ax - x - q.lo1) * h2 - q.lo2 + ay;
        for (i64 y = y_lo; y <= y_hi; ++y) {
          const auto i1 = static_cast<std::size_t>(base1 + y);
          const Complex v1 = a1[i1];
          if (v1 == Complex{}) continue;
          const auto i2 = static_cast<std::size_t>(base2 - y);
          const Complex v2 = a2[i2];
          if (v2 == Complex{}) continue;
          acc.add(static_cast<std::size_t>(k1[i1] + k2[i2] - kmin), v1 * v2);
        }
      }
      row_energy += acc.drain();
    }
    per_row[row] = row_energy;
  });
  double total = 0.0;
  for (double e : per_row) total += e;
  return total;
}

struct BinKey {
  i64 ay;
  i64 k;
  bool operator==(const BinKey&) const = default;
};
struct BinKeyHash {
  std::size_t operator()(const BinKey& b) const noexcept { return std::hash<FreqPoint>{}({b.ay, b.k}); }
};

/// Support-list kernel for sparse data: groups pairs by the first output
/// coordinate a1 and hashes (a2, k). Cost ~ S_1 * S_2.
inline double bin_energy_sparse(const BinOperand& p, const BinOperand& q) {
  struct Row {
    i64 x;
    std::size_t begin, end;
  };
  auto rows_of = [](const BinOperand& op) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < op.terms.size(); ++i) {
      if (rows.empty() || rows.back().x != op.terms[i].n.n1) rows.push_back({op.terms[i].n.n1, i, i});
      rows.back().end = i + 1;
    }
    return rows;
  };
  const std::vector<Row> rows1 = rows_of(p), rows2 = rows_of(q);
  std::vector<long> row2_at(static_cast<std::size_t>(q.width()), -1);
  for (std::size_t r = 0; r < rows2.size(); ++r) row2_at[static_cast<std::size_t>(rows2[r].x - q.lo1)] = static_cast<long>(r);

  const i64 ax_lo = p.lo1 + q.lo1;
  std::vector<double> per_row(static_cast<std::size_t>(p.hi1 + q.hi1 - ax_lo + 1));
  parallel_for(per_row.size(), [&](std::size_t row) {
    const i64 ax = ax_lo + static_cast<i64>(row);
    thread_local std::unordered_map<BinKey, std::size_t, BinKeyHash> index;
    thread_local std::vector<Complex> sums;
    index.clear();
    sums.clear();
    for (const Row& r1 : rows1) {
      const i64 x2 = ax - r1.x;
      if (x2 < q.lo1 || x2 > q.hi1) continue;
      const long r2i = row2_at[static_cast<std::size_t>(x2 - q.lo1)];
      if (r2i < 0) continue;
      const Row& r2 = rows2[static_cast<std::size_t>(r2i)];
      for (std::size_t i = r1.begin; i < r1.end; ++i) {
        const auto& t1 = p.terms[i];
        for (std::size_t j = r2.begin; j < r2.end; ++j) {
          const auto& t2 = q.terms[j];
          const BinKey key{t1.n.n2 + t2.n.n2, t1.phase + t2.phase};
          const auto [it, inserted] = index.try_emplace(key, sums.size());
          if (inserted) sums.push_back(Complex{});
          sums[it->second] += t1.value * t2.value;
        }
      }
    }
    double e = 0.0;
    for (const Complex& s : sums) e += std::norm(s);
    per_row[row] = e;
  });
  double total = 0.0;
  for (double e : per_row) total += e;
  return total;
}

}  // namespace detail

/// sum_{a,k} |sum_{n+m=a, s1 S(n) + s2 S(m) = k} c1(n) c2(m)|^2, the squared
/// L^2([0,1] x T^2) norm of (e^{i s1 t Box} c1)(e^{i s2 t Box} c2).
///
/// Picks the dense kernel when both supports fill their bounding boxes well,
/// the hashed one otherwise. Both reduce per output row in index order, so the
/// value does not depend on the worker count.
inline double pair_bin_energy(const FourierCoeffs& c1, int sigma1, const FourierCoeffs& c2, int sigma2,
                              Symbol kind = Symbol::hyperbolic) {
  if (c1.empty() || c2.empty()) return 0.0;
  const auto p = detail::make_operand(c1, sigma1, kind);
  const auto q = detail::make_operand(c2, sigma2, kind);
  const double dense_cost = static_cast<double>(p.width() * p.height()) * static_cast<double>(q.width() * q.height());
  const double sparse_cost = static_cast<double>(p.terms.size()) * static_cast<double>(q.terms.size());
  return dense_cost <= 8.0 * sparse_cost ? detail::bin_energy_dense(p, q) : detail::bin_energy_sparse(p, q);
}

/// ||e^{it Box} f||_{L^4([0,1] x T^2)}, exact.
inline double l4_spacetime_exact(const FourierCoeffs& c, Symbol kind = Symbol::hyperbolic) {
  return std::pow(pair_bin_energy(c, 1, c, 1, kind), 0.25);
}

/// ||e^{+-it Box} phi1 . e^{it Box} phi2||_{L^2([0,1] x T^2)}, no conjugation.
inline double bilinear_l2_exact(const FourierCoeffs& c1, const FourierCoeffs& c2, Sign sign,
                                Symbol kind = Symbol::hyperbolic) {
  return std::sqrt(pair_bin_energy(c1, sign == Sign::plus ? 1 : -1, c2, 1, kind));
}

/// ||e^{it Box} phi1 . conj(e^{it Box} phi2)||_{L^2}: bins by a = n1 - n2,
/// k = S(n1) - S(n2), the pairing inside |u|^2 u.
inline double bilinear_l2_conjugate(const FourierCoeffs& c1, const FourierCoeffs& c2,
                                    Symbol kind = Symbol::hyperbolic) {
  // conj(e^{it Box} phi) has amplitude conj(c(n)) at frequency -n and symbol -S(n).
  std::vector<FreqPoint> reflected;
  for (const auto& [n, v] : c2.entries()) reflected.push_back(-n);
  FourierCoeffs mirrored(enclosing_half_width(reflected));
  for (const auto& [n, v] : c2.entries()) mirrored.set(-n, std::conj(v));
  return std::sqrt(pair_bin_energy(c1, 1, mirrored, -1, kind));
}

/// Index of the tile a + (-N, N]^2, a in 2N Z^2, that contains n.
constexpr FreqPoint tile_of(FreqPoint n, i64 half_width) {
  auto fdiv = [](i64 a, i64 b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  return {fdiv(n.n1 + half_width - 1, 2 * half_width), fdiv(n.n2 + half_width - 1, 2 * half_width)};
}

/// Splits c into its projections on the disjoint tiling by N-boxes centred on 2N Z^2.
inline std::map<FreqPoint, FourierCoeffs> tile_decomposition(const FourierCoeffs& c, i64 half_width) {
  require(half_width >= 1, "tile half-width must be positive");
  std::map<FreqPoint, FourierCoeffs> tiles;
  for (const auto& [n, v] : c.entries()) {
    auto [it, inserted] = tiles.try_emplace(tile_of(n, half_width), c.half_width());
    it->second.set(n, v);
  }
  return tiles;
}

/// ||sum_a e^{it Box} P_a phi1 . e^{it Box} phi2||^2 / sum_a ||e^{it Box} P_a phi1 . e^{it Box} phi2||^2
/// over the tiling by N2-boxes.
inline double orthogonality_defect(const FourierCoeffs& c1, const FourierCoeffs& c2, i64 tile_half_width,
                                   Symbol kind = Symbol::hyperbolic) {
  const double whole = pair_bin_energy(c1, 1, c2, 1, kind);
  double pieces = 0.0;
  for (const auto& [a, piece] : tile_decomposition(c1, tile_half_width)) pieces += pair_bin_energy(piece, 1, c2, 1, kind);
  require(pieces > 0.0, "orthogonality_defect: product of the inputs vanishes");
  return whole / pieces;
}

}  // namespace hnls
