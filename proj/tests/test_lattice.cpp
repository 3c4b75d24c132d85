#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "hnls/lattice.hpp"
#include "hnls/parallel.hpp"
#include "oracles.hpp"

namespace hnls {
namespace {

TEST(Isqrt, ExactAroundSquares) {
  for (i64 r : {0LL, 1LL, 2LL, 3037000499LL, 1LL << 31, 99999999LL}) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r > 0) {
      EXPECT_EQ(isqrt(r * r - 1), r - 1);
    }
    EXPECT_EQ(isqrt(r * r + 1), r == 0 ? 1 : r);
  }
}

TEST(CountBrute, Examples) {
  EXPECT_EQ(count_A_l_brute(2, 0), 9);
  EXPECT_EQ(count_A_l_brute(3, 3), 4);
  for (i64 n : {1, 5, 17, 40}) EXPECT_EQ(count_A_l_brute(n, 2), 0);
  for (i64 n = 1; n <= 12; ++n)
    for (i64 l = -n * n - 3; l <= n * n + 3; ++l)
      EXPECT_EQ(count_A_l_brute(n, l), oracle::count_level_full_scan(n, l)) << "N=" << n << " l=" << l;
}

TEST(CountDivisor, Examples) {
  EXPECT_EQ(count_A_l_divisor(3, 3), 4);
  EXPECT_EQ(count_A_l_divisor(2, 4), 2);
  EXPECT_EQ(oracle::count_level_full_scan(2, 4), 2);
  for (i64 n : {1, 3, 10, 100}) EXPECT_EQ(count_A_l_divisor(n, 6), 0);
  EXPECT_THROW(count_A_l_divisor(4, 0), ValidationError);
}

// Both counters agree exactly, and #A_l = #A_{-l}.
TEST(CountDivisor, AgreesWithBruteAndIsSymmetric) {
  for (i64 n = 1; n <= 24; ++n)
    for (i64 l = 1; l <= n * n; ++l) {
      const i64 pos = count_A_l_brute(n, l);
      ASSERT_EQ(count_A_l_divisor(n, l), pos) << "N=" << n << " l=" << l;
      ASSERT_EQ(count_A_l_divisor(n, -l), pos) << "N=" << n << " l=" << -l;
      ASSERT_EQ(count_A_l_brute(n, -l), pos);
    }
}

TEST(CountA0, ClosedFormMatchesBrute) {
  EXPECT_EQ(count_A_0(1), 5);
  EXPECT_EQ(count_A_0(2), 9);
  EXPECT_EQ(count_A_0(100), 401);
  for (i64 n = 1; n <= 300; ++n) EXPECT_EQ(count_A_0(n), count_A_l_brute(n, 0));
}

TEST(Counts, TotalMassIsBoxArea) {
  for (i64 n : {1, 2, 5, 13, 30}) {
    i64 total = 0;
    for (i64 l = -n * n; l <= n * n; ++l) total += count_A_l_brute(n, l);
    EXPECT_EQ(total, (2 * n + 1) * (2 * n + 1));
  }
}

TEST(DivisorCount, Examples) {
  EXPECT_EQ(divisor_count(1), 1);
  EXPECT_EQ(divisor_count(12), 6);
  EXPECT_EQ(divisors(12), (std::vector<i64>{1, 2, 3, 4, 6, 12}));
  for (i64 n = 1; n <= 2000; ++n) ASSERT_EQ(divisor_count(n), oracle::divisor_count_by_listing(n));
}

TEST(DivisorCount, PrimesHaveTwoDivisors) {
  const auto prime = oracle::prime_sieve(1000000);
  for (std::size_t p = 2; p < prime.size(); ++p)
    if (prime[p]) {
      ASSERT_EQ(divisor_count(static_cast<i64>(p)), 2) << p;
    }
}

TEST(MaxAl, MatchesBruteMaximumAndBound) {
  for (i64 n : {2, 5, 8, 16, 33}) {
    const LevelCount best = max_A_l(n, n * n);
    LevelCount brute{0, -1};
    for (i64 a = 1; a <= n * n; ++a)
      for (i64 l : {a, -a}) {
        const i64 c = oracle::count_level_full_scan(n, l);
        if (c > brute.count) brute = {l, c};
      }
    EXPECT_EQ(best.count, brute.count) << "N=" << n;
    EXPECT_EQ(best.level, brute.level) << "N=" << n;
    EXPECT_GT(best.level, 0);
    EXPECT_LE(best.count, 2 * divisor_count(best.level));
  }
  EXPECT_THROW(max_A_l(4, 17), ValidationError);
}

TEST(MaxAl, IncrementalSweepMatchesDirectMaximum) {
  const std::vector<i64> sweep = max_A_l_sweep(48);
  for (i64 n = 1; n <= 48; ++n) EXPECT_EQ(sweep[static_cast<std::size_t>(n)], max_A_l(n, n * n).count) << "N=" << n;
}

// #A_l <= 2 d(|l|): one point per signed factor pair of l.
TEST(MaxAl, DivisorBoundOfTheLevel) {
  for (i64 n : {3, 10, 40, 128})
    for (i64 l = 1; l <= n * n; ++l) ASSERT_LE(count_A_l_divisor(n, l), 2 * divisor_count(l)) << "N=" << n << " l=" << l;
}

// The level-independent cap 2 d(4N^2) is not a bound: it already fails at N = 128.
TEST(MaxAl, FixedCapFailsAtPowersOfTwo) {
  EXPECT_EQ(oracle::count_level_full_scan(128, 1440), 40);
  EXPECT_EQ(count_A_l_divisor(128, 1440), 40);
  EXPECT_EQ(2 * divisor_count(4 * 128 * 128), 34);
  EXPECT_EQ(max_A_l(128, 128 * 128).count, 40);
}

// Recorded, not asserted beyond monotonicity: growth of max #A_l relative to
// N^{1/4} along N = 2^k.
TEST(MaxAl, DyadicTabulation) {
  const std::vector<i64> sweep = max_A_l_sweep(4096);
  for (int k = 1; k <= 12; ++k) {
    const i64 n = i64{1} << k;
    const i64 m = sweep[static_cast<std::size_t>(n)];
    EXPECT_GE(m, sweep[static_cast<std::size_t>(n / 2)]);
    RecordProperty("max_over_quarter_power_N" + std::to_string(n), std::to_string(m / std::pow(n, 0.25)));
  }
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_diag_count(1, 0), 7);
  EXPECT_EQ(gamma_diag_count(2, 2), 15);
  EXPECT_EQ(gamma_diag_count(1, 3), 1);
  EXPECT_EQ(gamma_diag_count(1, 4), 0);
  EXPECT_EQ(gamma_diag_count(5, -16), 0);
}

TEST(Gamma, MatchesTripleEnumeration) {
  for (i64 n = 0; n <= 12; ++n) {
    const auto hist = oracle::triple_histogram(n);
    for (i64 q = -3 * n - 2; q <= 3 * n + 2; ++q) {
      const auto it = hist.find(q);
      EXPECT_EQ(gamma_diag_count(n, q), it == hist.end() ? 0 : it->second) << "N=" << n << " q=" << q;
    }
  }
}

TEST(Gamma, CentreValueAndLowerBound) {
  for (i64 n = 1; n <= 200; ++n) {
    EXPECT_EQ(gamma_diag_count(n, 0), 3 * n * n + 3 * n + 1);
    for (i64 q = -n / 2; q <= n / 2; ++q) ASSERT_GE(gamma_diag_count(n, q), n * n);
  }
}

TEST(LatticeReport, DivisorFallsBackToClosedFormAtZero) {
  const LatticeReport b = lattice_report(2, 4, CountMethod::brute);
  const LatticeReport d = lattice_report(2, 4, CountMethod::divisor);
  EXPECT_EQ(b.counts, d.counts);
  EXPECT_EQ(b.counts.at(0), 9);
  EXPECT_EQ(b.counts.at(2), 0);
  EXPECT_EQ(b.extreme.count, d.extreme.count);
}

TEST(LatticeReport, ThreadCountDoesNotChangeCounts) {
  set_thread_count(1);
  const LatticeReport one = lattice_report(20, 400, CountMethod::divisor);
  set_thread_count(4);
  const LatticeReport four = lattice_report(20, 400, CountMethod::divisor);
  set_thread_count(0);
  EXPECT_EQ(one.counts, four.counts);
  EXPECT_EQ(one.extreme.level, four.extreme.level);
}

}  // namespace
}  // namespace hnls
