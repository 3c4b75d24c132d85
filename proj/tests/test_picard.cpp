#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hnls/picard.hpp"
#include "hnls/rng.hpp"
#include "oracles.hpp"

namespace hnls {
namespace {

double distance_to(const FourierCoeffs& c, const std::map<FreqPoint, Complex>& ref) {
  double d = 0.0;
  for (const auto& [n, v] : ref) d += std::norm(c.at(n) - v);
  for (const auto& [n, v] : c.entries())
    if (!ref.contains(n)) d += std::norm(v);
  return std::sqrt(d);
}

double norm_of(const std::map<FreqPoint, Complex>& ref) {
  double d = 0.0;
  for (const auto& [n, v] : ref) d += std::norm(v);
  return std::sqrt(d);
}

TEST(PicardClosedForm, Examples) {
  PicardConfig cfg;
  const FourierCoeffs one = picard_closed_form(1, cfg);
  EXPECT_EQ(one.size(), 7u);
  // Gamma counts 1,3,6,7,6,3,1.
  EXPECT_NEAR(l2_norm(one), std::sqrt(141.0), 1e-13);
  EXPECT_NEAR(std::abs(one.at({0, 0}) - Complex{0.0, -7.0}), 0.0, 1e-15);

  cfg.t = 0.0;
  EXPECT_TRUE(picard_closed_form(5, cfg).empty());
  EXPECT_THROW(picard_closed_form(0, PicardConfig{}), ValidationError);
}

TEST(PicardClosedForm, SupportIsFullDiagonal) {
  for (i64 n : {1, 2, 9, 40}) {
    const FourierCoeffs c = picard_closed_form(n, {});
    EXPECT_EQ(c.size(), static_cast<std::size_t>(6 * n + 1));
    for (const auto& [k, v] : c.entries()) {
      EXPECT_EQ(k.n1, k.n2);
      EXPECT_LE(std::abs(k.n1), 3 * n);
    }
  }
}

TEST(PicardClosedForm, LinearInTimeAndCoupling) {
  const FourierCoeffs base = picard_closed_form(6, {});
  PicardConfig cfg;
  cfg.t = -2.5;
  cfg.mu = 3.0;
  const FourierCoeffs scaled = picard_closed_form(6, cfg);
  EXPECT_LE(l2_distance(scaled, base.scaled(-7.5)), 1e-12 * l2_norm(scaled));
}

TEST(PicardQuadrature, MatchesClosedFormOnDiagonal) {
  for (i64 n : {1, 2, 3, 5, 8, 16, 32}) {
    const FourierCoeffs exact = picard_closed_form(n, {});
    for (int steps : {1, 3}) {
      PicardConfig cfg;
      cfg.quadrature_steps = steps;
      const FourierCoeffs q = picard_quadrature(make_phi({n, Normalization::mass_normalized}), cfg);
      EXPECT_LE(l2_distance(q, exact) / l2_norm(exact), 1e-10) << "N=" << n << " steps=" << steps;
    }
  }
}

TEST(PicardQuadrature, SingleModeIsPhaseRotation) {
  FourierCoeffs c(4);
  const Complex a{0.6, -0.3};
  c.set({3, -1}, a);
  PicardConfig cfg;
  cfg.t = 0.37;
  cfg.mu = -1.0;
  const FourierCoeffs q = picard_quadrature(c, cfg);
  const FourierCoeffs expected = evolve_linear(c, cfg.t).scaled(Complex{0.0, -cfg.mu} * cfg.t * std::norm(a));
  EXPECT_LE(l2_distance(q, expected), 1e-14);

  FourierCoeffs diag(3);
  diag.set({2, 2}, 1.0);
  cfg.t = 1.0;
  cfg.mu = 1.0;
  EXPECT_LE(l2_distance(picard_quadrature(diag, cfg), diag.scaled({0.0, -1.0})), 1e-14);
}

TEST(PicardQuadrature, GenericDataConvergesToTripleSum) {
  Rng rng(41);
  const FourierCoeffs phi = random_field(2, Ensemble::gaussian, rng);
  PicardConfig cfg;
  cfg.t = 0.05;
  const auto ref = oracle::picard_by_triples(phi, cfg.mu, cfg.t);
  std::vector<double> errors;
  for (int steps : {4, 8, 16}) {
    cfg.quadrature_steps = steps;
    errors.push_back(distance_to(picard_quadrature(phi, cfg), ref) / norm_of(ref));
  }
  EXPECT_LT(errors.back(), 1e-6);
  for (std::size_t i = 1; i < errors.size(); ++i) EXPECT_GE(std::log2(errors[i - 1] / errors[i]), 3.9) << i;
}

TEST(PicardQuadrature, OutputBandAndGridValidation) {
  Rng rng(42);
  const FourierCoeffs phi = random_field(3, Ensemble::unimodular, rng);
  PicardConfig cfg;
  cfg.quadrature_steps = 2;
  const FourierCoeffs q = picard_quadrature(phi, cfg);
  EXPECT_EQ(q.half_width(), 9);
  for (const auto& [n, v] : q.entries()) EXPECT_TRUE(in_box(n, 9));

  cfg.grid = 18;
  EXPECT_THROW(picard_quadrature(phi, cfg), ValidationError);
  cfg.grid = 19;
  EXPECT_LE(l2_distance(picard_quadrature(phi, cfg), q) / l2_norm(q), 1e-12);
  cfg.quadrature_steps = 0;
  EXPECT_THROW(picard_quadrature(phi, cfg), ValidationError);
}

TEST(GrowthExperiment, SlopesOverEveryN) {
  std::vector<i64> ns;
  for (i64 n = 8; n <= 512; ++n) ns.push_back(n);
  for (double s : {0.0, 0.25, 0.5}) {
    PicardConfig cfg;
    cfg.s = s;
    const GrowthReport r = growth_experiment(ns, cfg);
    EXPECT_NEAR(r.fit.slope, 1.0 + s, 0.03) << "s=" << s;
    // The normalised ratio settles: its spread over the upper half is small.
    const double hi = r.rows.back().ratio_to_n1plus_s;
    const double mid = r.rows[r.rows.size() / 2].ratio_to_n1plus_s;
    EXPECT_NEAR(hi / mid, 1.0, 0.02) << "s=" << s;
  }
  EXPECT_THROW(growth_experiment(ns, PicardConfig{1.0, 0.0}), ValidationError);
}

}  // namespace
}  // namespace hnls
