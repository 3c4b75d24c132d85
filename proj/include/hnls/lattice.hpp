#pragma once

// Integer lattice counts: level sets of n1^2 - n2^2 in the closed box [-N, N]^2,
// divisor counts, and the diagonal triple count Gamma.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnls/parallel.hpp"
#include "hnls/types.hpp"

namespace hnls {

/// floor(sqrt(x)) for x >= 0, exact over the whole 64-bit range.
constexpr i64 isqrt(i64 x) {
  if (x < 2) return x;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r > x / r) --r;
  while (r + 1 <= x / (r + 1)) ++r;
  return r;
}

inline void check_level_range(i64 n) {
  require(n >= 1, "box half-width N must be positive");
  require(n < (i64{1} << 30), "N too large: levels overflow 64-bit");
}

/// #A_l by scanning n2 and testing whether l + n2^2 is a square.
inline i64 count_A_l_brute(i64 n, i64 level) {
  check_level_range(n);
  i64 count = 0;
  for (i64 n2 = -n; n2 <= n; ++n2) {
    const i64 sq = level + n2 * n2;
    if (sq < 0) continue;
    const i64 r = isqrt(sq);
    if (r * r == sq && r <= n) count += (r == 0) ? 1 : 2;
  }
  return count;
}

/// Positive divisors of n in increasing order.
inline std::vector<i64> divisors(i64 n) {
  require(n >= 1, "divisors: n must be positive");
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// d(n) from the prime factorisation (trial division).
inline i64 divisor_count(i64 n) {
  require(n >= 1, "divisor_count: n must be positive");
  i64 result = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    i64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result *= e + 1;
  }
  if (n > 1) result *= 2;
  return result;
}

/// #A_l through factorisations l = m1 m2 with m1 = n1 + n2, m2 = n1 - n2.
///
/// m1 and m2 must share parity and map back into the box; with those exact
/// constraints the count equals count_A_l_brute.
inline i64 count_A_l_divisor(i64 n, i64 level) {
  check_level_range(n);
  require(level != 0, "count_A_l_divisor: level 0 has infinitely many factorisations; use count_A_0");
  const i64 abs_level = level < 0 ? -level : level;
  i64 count = 0;
  for (i64 d : divisors(abs_level)) {
    for (i64 m1 : {d, -d}) {
      const i64 m2 = level / m1;
      if (((m1 - m2) & 1) != 0) continue;
      const i64 n1 = (m1 + m2) / 2;
      const i64 n2 = (m1 - m2) / 2;
      if (n1 >= -n && n1 <= n && n2 >= -n && n2 <= n) ++count;
    }
  }
  return count;
}

/// #A_0 = 4N + 1: the two diagonals of [-N, N]^2.
constexpr i64 count_A_0(i64 n) { return 4 * n + 1; }

struct LevelCount {
  i64 level = 0;
  i64 count = 0;
};

/// Largest #A_l over 0 < |l| <= level_bound (divisor method).
/// Ties go to the smallest |l|, then to positive l.
inline LevelCount max_A_l(i64 n, i64 level_bound) {
  check_level_range(n);
  require(level_bound >= 1 && level_bound <= n * n, "max_A_l: level bound must lie in [1, N^2]");
  std::vector<LevelCount> per_level(static_cast<std::size_t>(level_bound));
  parallel_for(per_level.size(), [&](std::size_t i) {
    const i64 l = static_cast<i64>(i) + 1;
    const i64 pos = count_A_l_divisor(n, l);
    const i64 neg = count_A_l_divisor(n, -l);
    per_level[i] = pos >= neg ? LevelCount{l, pos} : LevelCount{-l, neg};
  });
  LevelCount best{1, -1};
  for (const auto& lc : per_level)
    if (lc.count > best.count) best = lc;
  return best;
}

/// max_{l != 0} #A_l for every N = 1..n_max in one incremental pass.
///
/// Growing the box from N-1 to N only adds the shell max(|n1|,|n2|) = N, and
/// by the l <-> -l symmetry it suffices to track l > 0, i.e. the shell points
/// (+-N, n2) with |n2| < N. Returns a vector indexed by N (entry 0 unused).
inline std::vector<i64> max_A_l_sweep(i64 n_max) {
  check_level_range(n_max);
  require(n_max <= 65536, "max_A_l_sweep: N too large for the level table");
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(n_max * n_max + 1), 0);
  std::vector<i64> best(static_cast<std::size_t>(n_max + 1), 0);
  std::uint32_t running = 0;
  for (i64 n = 1; n <= n_max; ++n) {
    for (i64 n2 = -(n - 1); n2 <= n - 1; ++n2) {
      auto& c = counts[static_cast<std::size_t>(n * n - n2 * n2)];
      c += 2;
      running = std::max(running, c);
    }
    best[static_cast<std::size_t>(n)] = running;
  }
  return best;
}

/// #Gamma((q,q)): triples (k1, k2, k3) of diagonal points with |k_i| <= N and
/// k1 - k2 + k3 = (q, q).
///
/// With s = k1 + k3 (multiplicity 2N+1-|s|) and k2 = s - q this is
///   sum over s in [q-N, q+N] intersect [-2N, 2N] of (2N + 1 - |s|).
inline i64 gamma_diag_count(i64 n, i64 q) {
  require(n >= 0, "gamma_diag_count: N must be nonnegative");
  if (q > 3 * n || q < -3 * n) return 0;
  const i64 lo = std::max(q - n, -2 * n);
  const i64 hi = std::min(q + n, 2 * n);
  i64 total = 0;
  for (i64 s = lo; s <= hi; ++s) total += 2 * n + 1 - (s < 0 ? -s : s);
  return total;
}

enum class CountMethod { brute, divisor, closed_form };

constexpr std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::divisor: return "divisor";
    case CountMethod::closed_form: return "closed_form";
  }
  return "?";
}

struct LatticeReport {
  i64 n = 0;
  CountMethod method = CountMethod::brute;
  std::map<i64, i64> counts;  // level -> #A_l
  LevelCount extreme;         // over l != 0, same tie-breaking as max_A_l
};

/// Counts for every level in [-level_bound, level_bound]. The divisor method
/// falls back to the closed form at l = 0.
inline LatticeReport lattice_report(i64 n, i64 level_bound, CountMethod method) {
  check_level_range(n);
  require(level_bound >= 0, "lattice_report: level bound must be nonnegative");
  require(method != CountMethod::closed_form, "lattice_report: closed form applies to l = 0 only");
  const std::size_t width = static_cast<std::size_t>(2 * level_bound + 1);
  std::vector<i64> values(width);
  parallel_for(width, [&](std::size_t i) {
    const i64 l = static_cast<i64>(i) - level_bound;
    if (method == CountMethod::brute) {
      values[i] = count_A_l_brute(n, l);
    } else {
      values[i] = l == 0 ? count_A_0(n) : count_A_l_divisor(n, l);
    }
  });
  LatticeReport report;
  report.n = n;
  report.method = method;
  report.extreme = {0, -1};
  for (std::size_t i = 0; i < width; ++i) report.counts[static_cast<i64>(i) - level_bound] = values[i];
  for (i64 a = 1; a <= level_bound; ++a) {
    for (i64 l : {a, -a}) {
      if (report.counts[l] > report.extreme.count) report.extreme = {l, report.counts[l]};
    }
  }
  return report;
}

}  // namespace hnls
