#pragma once

// First Picard iterate of the cubic equation,
//   A[phi](t) = -i mu int_0^t e^{i(t-t')Box} [ |e^{it'Box} phi|^2 e^{it'Box} phi ] dt'.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "hnls/extremals.hpp"
#include "hnls/lattice.hpp"
#include "hnls/parallel.hpp"
#include "hnls/report.hpp"

namespace hnls {

struct PicardConfig {
  double mu = 1.0;
  double t = 1.0;
  int quadrature_steps = 8;  // Simpson panels; 2 * steps + 1 nodes
  double s = 0.0;
  std::size_t grid = 0;  // 0 picks the smallest fast size >= 6N + 1
};

/// A[phi_N](t) for the mass-normalised diagonal phi_N: on the diagonal the
/// integrand does not depend on t', giving -i mu t N^{-3/2} #Gamma((q,q)) at
/// (q, q) for |q| <= 3N.
inline FourierCoeffs picard_closed_form(i64 n, const PicardConfig& cfg) {
  require(n >= 1, "picard_closed_form: N must be >= 1");
  require(std::isfinite(cfg.t), "picard_closed_form: t must be finite");
  const Complex scale = Complex{0.0, -cfg.mu} * cfg.t * std::pow(static_cast<double>(n), -1.5);
  FourierCoeffs out(3 * n + 1);
  for (i64 q = -3 * n; q <= 3 * n; ++q) out.set({q, q}, scale * static_cast<double>(gamma_diag_count(n, q)));
  return out;
}

/// A[phi](t) by composite Simpson in t'. Each node evolves phi to t', forms
/// the cubic on a grid holding the tripled band exactly, and evolves the
/// result through t - t'. Returns coefficients on (-3N, 3N]^2.
inline FourierCoeffs picard_quadrature(const FourierCoeffs& phi, const PicardConfig& cfg) {
  require(cfg.quadrature_steps >= 1, "picard_quadrature: quadrature_steps must be >= 1");
  require(std::isfinite(cfg.t), "picard_quadrature: t must be finite");
  const i64 n = phi.half_width();
  const i64 out_n = 3 * n;
  const auto min_grid = static_cast<std::size_t>(2 * out_n + 1);
  if (cfg.grid != 0)
    require(cfg.grid >= min_grid, "picard_quadrature: grid " + std::to_string(cfg.grid) +
                                      " cannot hold the tripled band (need >= " + std::to_string(min_grid) + ")");
  const std::size_t m = cfg.grid != 0 ? cfg.grid : good_fft_size(min_grid);

  const int nodes = 2 * cfg.quadrature_steps + 1;
  const double h = cfg.t / (2.0 * cfg.quadrature_steps);
  const DenseCoeffs start = to_dense(phi);
  std::vector<DenseCoeffs> contributions(static_cast<std::size_t>(nodes));
  parallel_for(contributions.size(), [&](std::size_t j) {
    const double tp = h * static_cast<double>(j);
    DenseCoeffs v = start;
    evolve_linear_inplace(v, tp);
    Fft2d fft(m);
    scatter_to_grid(v, fft);
    fft.backward();
    for (Complex& u : fft.data()) u *= std::norm(u);
    fft.forward();
    DenseCoeffs g = gather_from_grid(fft, out_n);
    evolve_linear_inplace(g, cfg.t - tp);
    const double w = (j == 0 || static_cast<int>(j) == nodes - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    for (Complex& c : g.values) c *= w * h / 3.0;
    contributions[j] = std::move(g);
  });
  DenseCoeffs acc(out_n);
  for (const auto& g : contributions)
    for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += g.values[i];
  for (Complex& c : acc.values) c *= Complex{0.0, -cfg.mu};
  return to_sparse(acc);
}

struct GrowthRow {
  i64 n = 0;
  double s = 0.0;
  double t = 0.0;
  double hs_norm = 0.0;
  double ratio_to_n1plus_s = 0.0;  // hs_norm / (t N^{1+s})
  double ratio_to_n3s = 0.0;       // hs_norm / N^{3s}
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  LinearFit fit;  // log hs_norm against log N
};

/// ||A[phi_N](t)||_{H^s} from the closed form, for each N.
inline GrowthReport growth_experiment(std::span<const i64> ns, const PicardConfig& cfg) {
  require(cfg.t > 0.0, "growth_experiment: t must be positive");
  GrowthReport report;
  std::vector<double> xs, ys;
  for (i64 n : ns) {
    GrowthRow row;
    row.n = n;
    row.s = cfg.s;
    row.t = cfg.t;
    row.hs_norm = hs_norm(picard_closed_form(n, cfg), cfg.s);
    const double nd = static_cast<double>(n);
    row.ratio_to_n1plus_s = row.hs_norm / (cfg.t * std::pow(nd, 1.0 + cfg.s));
    row.ratio_to_n3s = row.hs_norm / std::pow(nd, 3.0 * cfg.s);
    xs.push_back(nd);
    ys.push_back(row.hs_norm);
    report.rows.push_back(row);
  }
  if (xs.size() >= 2) report.fit = loglog_fit(xs, ys);
  return report;
}

}  // namespace hnls
