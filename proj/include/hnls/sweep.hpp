#pragma once

// Seeded Monte-Carlo sweeps over the exact space-time norms.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hnls/extremals.hpp"
#include "hnls/report.hpp"
#include "hnls/rng.hpp"

namespace hnls {

struct StrichartzRow {
  i64 n = 0;
  Ensemble ensemble = Ensemble::unimodular;
  int trials = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double extremizer_ratio = 0.0;
};

struct StrichartzSweep {
  Symbol symbol = Symbol::hyperbolic;
  std::vector<StrichartzRow> rows;
  LinearFit fit;  // log max_ratio against log N
};

/// Per N: max and mean L^4/L^2 ratio over `trials` random fields on
/// (-N, N]^2 (trial t of size N draws from Rng(seed, N, t)), and the ratio of
/// the unit-amplitude diagonal phi_N.
inline StrichartzSweep strichartz_sweep(std::span<const i64> ns, int trials, std::uint64_t seed, Ensemble ensemble,
                                        Symbol kind = Symbol::hyperbolic) {
  require(trials >= 1, "strichartz_sweep: trials must be >= 1");
  require(!ns.empty(), "strichartz_sweep: empty N list");
  StrichartzSweep sweep;
  sweep.symbol = kind;
  std::vector<double> xs, ys;
  for (i64 n : ns) {
    require(n >= 1, "strichartz_sweep: N must be >= 1");
    StrichartzRow row;
    row.n = n;
    row.ensemble = ensemble;
    row.trials = trials;
    row.extremizer_ratio = strichartz_ratio(make_phi({n, Normalization::unit_amplitudes}), kind);
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      double r = row.extremizer_ratio;
      if (ensemble != Ensemble::extremizer) {
        Rng rng(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
        r = strichartz_ratio(random_field(n, ensemble, rng), kind);
      }
      row.max_ratio = t == 0 ? r : std::max(row.max_ratio, r);
      sum += r;
    }
    row.mean_ratio = sum / trials;
    xs.push_back(static_cast<double>(n));
    ys.push_back(row.max_ratio);
    sweep.rows.push_back(row);
  }
  if (xs.size() >= 2) sweep.fit = loglog_fit(xs, ys);
  return sweep;
}

struct BilinearTrial {
  i64 n1 = 0;
  i64 n2 = 0;
  int trial = 0;
  double ratio = 0.0;          // ||e^{itBox}phi1 e^{itBox}phi2|| / (||phi1|| ||phi2|| N2^{1/2})
  double orthogonality = 0.0;  // orthogonality_defect over N2-tiles, 0 when not requested
};

struct BilinearExperiment {
  std::vector<BilinearTrial> trials;
  double max_ratio = 0.0;
};

/// Random unimodular phi1 on (-N1, N1]^2 and phi2 on (-N2, N2]^2, both drawn
/// from Rng(seed, N1 * 2^20 + N2, trial).
inline BilinearExperiment bilinear_experiment(i64 n1, std::span<const i64> n2s, int trials, std::uint64_t seed,
                                              bool with_orthogonality = false, Symbol kind = Symbol::hyperbolic) {
  require(trials >= 1, "bilinear_experiment: trials must be >= 1");
  BilinearExperiment out;
  for (i64 n2 : n2s) {
    require(n2 >= 1 && n2 <= n1, "bilinear_experiment: need 1 <= N2 <= N1");
    for (int t = 0; t < trials; ++t) {
      Rng rng(seed, static_cast<std::uint64_t>((n1 << 20) + n2), static_cast<std::uint64_t>(t));
      const FourierCoeffs c1 = random_field(n1, Ensemble::unimodular, rng);
      const FourierCoeffs c2 = random_field(n2, Ensemble::unimodular, rng);
      BilinearTrial row;
      row.n1 = n1;
      row.n2 = n2;
      row.trial = t;
      row.ratio = bilinear_l2_exact(c1, c2, Sign::plus, kind) /
                  (l2_norm(c1) * l2_norm(c2) * std::sqrt(static_cast<double>(n2)));
      if (with_orthogonality) row.orthogonality = orthogonality_defect(c1, c2, n2, kind);
      out.max_ratio = std::max(out.max_ratio, row.ratio);
      out.trials.push_back(row);
    }
  }
  return out;
}

}  // namespace hnls
