#include <gtest/gtest.h>

#include <cmath>

#include "cga/bounds.hpp"
#include "cga/generator.hpp"
#include "support/oracles.hpp"

using cga::TreeParams;

TEST(MStar, Examples) {
  EXPECT_DOUBLE_EQ(cga::m_star(0.5, 2, 2), 2.0);
  EXPECT_NEAR(cga::m_star(1, 2, std::exp(1.0)), std::log(2.0), 1e-12);
  EXPECT_DOUBLE_EQ(cga::m_star(0.25, 2, 2), 4.0);
  EXPECT_THROW(cga::m_star(0, 2, 2), std::domain_error);
  EXPECT_THROW(cga::m_star(0.5, 1, 2), std::domain_error);
  EXPECT_THROW(cga::m_star(0.5, 2, 1), std::domain_error);
}

TEST(ThresholdHeights, Examples) {
  const TreeParams p(2, 16, 2);
  const auto zero = cga::threshold_heights(p, 0);
  EXPECT_NEAR(zero.h_star, 1.735, 1e-3);
  EXPECT_DOUBLE_EQ(zero.h_star, zero.h_epsilon);
  EXPECT_NEAR(zero.tall_height, 4.804, 1e-3);
  EXPECT_THROW(cga::threshold_heights(TreeParams(2, 1, 2), 0.1), std::domain_error);
  EXPECT_NO_THROW(cga::threshold_heights(TreeParams(3, 1, 2), 0.1));
}

TEST(ThresholdHeights, PowerIdentities) {
  for (std::uint64_t b : {2, 3, 5}) {
    for (unsigned H : {4u, 10u, 20u}) {
      const TreeParams p(b, H, 2);
      const double ln_n = H * std::log(static_cast<double>(b));
      for (double eps : {0.0, 0.05, 0.2}) {
        const auto th = cga::threshold_heights(p, eps);
        const double lhs = std::pow(static_cast<double>(b), th.h_star);
        EXPECT_NEAR(lhs, std::pow(ln_n, 0.5 - eps), 1e-12 * lhs);
        const double rhs = std::pow(static_cast<double>(b), th.h_epsilon);
        EXPECT_NEAR(rhs, std::pow(ln_n, 0.5 + eps), 1e-12 * rhs);
        EXPECT_NEAR(lhs * rhs, ln_n, 1e-12 * ln_n);
      }
    }
  }
}

TEST(GammaConstant, UsesSmallestPowerAboveMStar) {
  // m* = 2, smallest power of 2 above it is 4: (0.5/4) * (4 - 2)/4.
  EXPECT_DOUBLE_EQ(cga::gamma_constant(0.5, 2, 2), 0.0625);
  // m* = 4/3 with b=2, c=2, alpha=0.75: h_min = 1 (2 > 4/3).
  EXPECT_NEAR(cga::gamma_constant(0.75, 2, 2), 0.75 / 4 * (2 - 4.0 / 3) / 2, 1e-15);
  const auto tc = cga::threshold_constants(TreeParams(2, 16, 2), 0.5, 0.1);
  EXPECT_DOUBLE_EQ(tc.m_star, 2.0);
  EXPECT_DOUBLE_EQ(tc.epsilon, 0.1);
  EXPECT_LT(tc.h_star, tc.h_epsilon);
}

TEST(CliqueCountLowerBound, Examples) {
  EXPECT_NEAR(cga::clique_count_lower_bound(1, TreeParams(2, 14, 2)).value, 512.0, 1e-9);
  EXPECT_NEAR(cga::clique_count_lower_bound(0, TreeParams(2, 14, 2)).value, 16384.0, 1e-9);
  const auto v = cga::clique_count_lower_bound(2, TreeParams(2, 14, 2));
  EXPECT_NEAR(v.value, 4096.0 * std::pow(2.0, -32), 1e-18);
  EXPECT_NEAR(v.log, std::log(4096.0) - 32 * std::log(2.0), 1e-12);
  const auto tiny = cga::clique_count_lower_bound(5, TreeParams(2, 14, 2));
  EXPECT_EQ(tiny.value, 0.0);
  EXPECT_TRUE(std::isfinite(tiny.log));
}

TEST(ExactCliqueProbability, Examples) {
  const TreeParams p(2, 8, 2);
  EXPECT_DOUBLE_EQ(cga::exact_clique_probability(1, p).value, 0.5);
  EXPECT_DOUBLE_EQ(cga::exact_clique_probability(2, p).value, 1.0 / 1024);
  EXPECT_DOUBLE_EQ(cga::exact_clique_probability(0, p).value, 1.0);
}

TEST(ExactCliqueProbability, DominatesPerSetFactor) {
  for (std::uint64_t b : {2, 3, 4}) {
    for (double c : {1.1, 2.0, 5.0}) {
      const TreeParams p(b, 5, c);
      for (unsigned h = 0; h <= 4; ++h) {
        const double per_set = -static_cast<double>(h) * std::pow(static_cast<double>(b), 2.0 * h) * std::log(c);
        EXPECT_GE(cga::exact_clique_probability(h, p).log, per_set - 1e-9);
      }
    }
  }
}

TEST(ClusterCountGuarantee, Examples) {
  const TreeParams p(2, 14, 2);
  EXPECT_NEAR(cga::cluster_count_guarantee(4, p, 0.5, 1e9), std::pow(std::log(16384.0), 0.25), 1e-12);
  EXPECT_NEAR(cga::cluster_count_guarantee(4, p, 0.5, 1e9), 1.765, 1e-3);
  EXPECT_NEAR(cga::cluster_count_guarantee(2 + 1e-12, p, 0.5, 1e9), 1.0, 1e-9);
  EXPECT_DOUBLE_EQ(cga::cluster_count_guarantee(40, p, 0.5, 3), 3.0);
  EXPECT_THROW(cga::cluster_count_guarantee(2, p, 0.5, 10), std::domain_error);
}

TEST(BinomTailBound, Examples) {
  EXPECT_NEAR(cga::binom_tail_bound(10, 0.1, 2), 2 * 45 * 0.01 * std::pow(0.9, 8), 1e-12);
  EXPECT_NEAR(static_cast<double>(oracle::binom_tail(10, 0.1, 2)), 0.2639, 1e-4);
  const double far = cga::binom_tail_bound(10, 0.5, 1.8);
  EXPECT_GT(far, 0);
  EXPECT_TRUE(std::isfinite(far));
  EXPECT_NEAR(cga::binom_tail_bound(10, 0.1, 3), 1.5 * 120 * 1e-3 * std::pow(0.9, 7), 1e-12);
  EXPECT_THROW(cga::binom_tail_bound(10, 0.1, 1), std::domain_error);
  EXPECT_THROW(cga::binom_tail_bound(10, 0.5, 2), std::domain_error);
  EXPECT_THROW(cga::binom_tail_bound(10, 0.0, 2), std::domain_error);
}

TEST(BinomTailSimple, Examples) {
  EXPECT_NEAR(cga::binom_tail_simple(100, 0.01, 10), 2 * std::exp(10 * (std::log(100.0) + 1 - std::log(10.0) + std::log(0.01))), 1e-15);
  EXPECT_NEAR(cga::binom_tail_simple(100, 0.01, 10), 4.405e-6, 0.001e-6);
  EXPECT_THROW(cga::binom_tail_simple(100, 0.1, 19), std::domain_error);
  for (double s : {2.0, 5.0, 7.5}) {
    const double a = cga::binom_tail_simple(100, 0.01, s);
    const double b = cga::binom_tail_simple_intermediate(100, 0.01, s);
    EXPECT_NEAR(a, b, 1e-12 * a);
  }
}

TEST(TailBounds, DominateExactTailOnGrid) {
  for (std::uint64_t n : {10, 50, 100}) {
    for (double prob : {0.01, 0.1, 0.3}) {
      const double mean = prob * n;
      for (double t : {1.01, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0}) {
        const double s = std::ceil(t * mean - 1e-9);
        if (s < 1 || s > n - 1.0) continue;
        const auto exact = oracle::binom_tail(n, prob, static_cast<std::uint64_t>(s));
        EXPECT_LE(exact, cga::binom_tail_bound(n, prob, t) * (1 + 1e-12)) << n << ' ' << prob << ' ' << t;
      }
      for (std::uint64_t s = 1; s <= n; ++s) {
        if (s < 2 * mean) continue;
        const auto exact = oracle::binom_tail(n, prob, s);
        EXPECT_LE(exact, cga::binom_tail_simple(n, prob, static_cast<double>(s)) * (1 + 1e-12)) << n << ' ' << prob << ' ' << s;
      }
    }
  }
}

TEST(JansonBounds, Examples) {
  const auto jb = cga::janson_bounds(10, 5);
  EXPECT_NEAR(jb.upper, std::exp(-25 / (2 * (10 + 5.0 / 3))), 1e-15);
  EXPECT_NEAR(jb.upper, 0.3425, 1e-4);
  EXPECT_NEAR(jb.lower, std::exp(-1.25), 1e-15);
  const auto zero = cga::janson_bounds(3, 0);
  EXPECT_EQ(zero.upper, 1.0);
  EXPECT_EQ(zero.lower, 1.0);
  EXPECT_THROW(cga::janson_bounds(0, 1), std::domain_error);
  EXPECT_THROW(cga::janson_bounds(1, -1), std::domain_error);
}

TEST(ExpectedInternalEdges, Examples) {
  EXPECT_DOUBLE_EQ(cga::expected_internal_edges(2, TreeParams(2, 4, 2)), 2.0);
  EXPECT_DOUBLE_EQ(cga::expected_internal_edges(1, TreeParams(3, 2, 3)), 1.0);
  for (std::uint64_t b : {2, 3}) {
    const TreeParams p(b, 6, 1.7);
    EXPECT_NEAR(cga::expected_internal_edges(6, p), cga::expected_edge_count(p), 1e-9);
  }
  EXPECT_THROW(cga::expected_internal_edges(0, TreeParams(2, 4, 2)), std::domain_error);
}

TEST(ExpectedInternalEdges, Monotonicity) {
  for (unsigned h = 1; h < 5; ++h) {
    EXPECT_LT(cga::expected_internal_edges(h, TreeParams(2, 6, 2)), cga::expected_internal_edges(h + 1, TreeParams(2, 6, 2)));
    EXPECT_LT(cga::expected_internal_edges(h, TreeParams(2, 6, 2)), cga::expected_internal_edges(h, TreeParams(3, 6, 2)));
    EXPECT_GT(cga::expected_internal_edges(h, TreeParams(2, 6, 2)), cga::expected_internal_edges(h, TreeParams(2, 6, 2.5)));
  }
}

TEST(SparseSetUpperBound, Examples) {
  EXPECT_NEAR(cga::sparse_set_upper_bound(16, 0.5, 1, 2, 2), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(cga::sparse_set_upper_bound(1024, 0.5, 1, 2, 2), std::exp(-16.0), 1e-18);
  EXPECT_NEAR(cga::sparse_set_upper_bound(1024, 0.5, 2, 2, 2), std::exp(-0.5), 1e-15);
}

TEST(E2HeightThreshold, DiagnosticValue) {
  const double am = 0.5 * 4;
  const double expected = (4 * am * (1 + std::log(2.0)) - std::log(std::pow(2.0, am) - 2)) / (am * std::log(2.0) - std::log(2.0));
  EXPECT_NEAR(cga::e2_height_threshold(4, 0.5, 2, 2), expected, 1e-12);
  EXPECT_THROW(cga::e2_height_threshold(2, 0.5, 2, 2), std::domain_error);
}
