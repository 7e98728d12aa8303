#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "cga/numeric.hpp"
#include "cga/rng.hpp"

using cga::Rational;

TEST(Rational, ParsesDecimalsAndFractions) {
  EXPECT_EQ(Rational::parse("0.5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("1"), Rational(1, 1));
  EXPECT_EQ(Rational::parse(".25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("1e-2"), Rational(1, 100));
  EXPECT_EQ(Rational::parse("2.5E1"), Rational(25, 1));
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("0.6"), Rational(3, 5));
  EXPECT_EQ(Rational::parse("0e5"), Rational(0, 1));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", ".", "abc", "1..2", "1/0", "1/", "/2", "0.5x", "1e", "1e99", "99999999999999999999"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, CompareCountIsExactAtBoundaries) {
  const Rational half = Rational::parse("0.5");
  EXPECT_EQ(half.compare_count(1, 2), 0);
  EXPECT_EQ(half.compare_count(0, 1), -1);
  EXPECT_EQ(half.compare_count(2, 2), 1);
  const Rational r = Rational::parse("0.6");
  EXPECT_EQ(r.compare_count(1, 2), -1);
  EXPECT_EQ(r.compare_count(3, 5), 0);
  const Rational third = Rational::parse("1/3");
  EXPECT_EQ(third.compare_count(1, 3), 0);
  EXPECT_EQ(third.compare_count(2, 6), 0);
  EXPECT_EQ(third.compare_count(333, 1000), -1);
  EXPECT_EQ(third.compare_count(334, 1000), 1);
}

TEST(Rational, FromDoubleUsesShortestText) {
  EXPECT_EQ(Rational::from_double(0.1), Rational(1, 10));
  EXPECT_EQ(Rational::from_double(0.75), Rational(3, 4));
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
  EXPECT_EQ(Rational(2, 1).to_string(), "2");
  EXPECT_DOUBLE_EQ(Rational(1, 3).to_double(), 1.0 / 3.0);
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(cga::format_real(2.0), "2");
  EXPECT_EQ(cga::format_real_point(2.0), "2.0");
  EXPECT_EQ(cga::format_real_point(0.0625), "0.0625");
  EXPECT_EQ(cga::format_real_point(1e300), "1e+300");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(cga::parse_real(cga::format_real(x)), x);
  }
  EXPECT_THROW(cga::parse_real("1.5x"), std::invalid_argument);
  EXPECT_THROW(cga::parse_real(""), std::invalid_argument);
}

TEST(CompensatedSum, RecoversLostLowOrderBits) {
  cga::CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 10000; ++i) s.add(1e-16);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-12, 1e-20);
}

TEST(LogValue, FromLog) {
  const auto v = cga::from_log(std::log(0.25));
  EXPECT_DOUBLE_EQ(v.value, 0.25);
  EXPECT_EQ(cga::from_log(-2000).value, 0.0);
  EXPECT_EQ(cga::from_log(-2000).log, -2000);
}

TEST(Rng, Mix64KnownValues) {
  // Reference outputs of SplitMix64 seeded with 0.
  cga::SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(sm.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(sm.next(), 0x06C45D188009454FULL);
}

TEST(Rng, XoshiroIsDeterministicAndKeyed) {
  cga::Xoshiro256 a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs |= x != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, StreamKeysAreDistinct) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t a = 0; a < 50; ++a)
    for (std::uint64_t b = 0; b < 50; ++b) keys.insert(cga::stream_key(7, a, b));
  EXPECT_EQ(keys.size(), 2500u);
  EXPECT_NE(cga::trial_seed(1, 0), cga::trial_seed(1, 1));
  EXPECT_NE(cga::trial_seed(1, 0), cga::trial_seed(2, 0));
}

TEST(Rng, UniformAndBelowStayInRange) {
  cga::Xoshiro256 rng(9);
  std::vector<int> hist(7, 0);
  double sum = 0;
  const int draws = 70000;
  for (int i = 0; i < draws; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    const auto k = rng.below(7);
    ASSERT_LT(k, 7u);
    ++hist[k];
  }
  EXPECT_NEAR(sum / draws, 0.5, 4 * std::sqrt(1.0 / 12 / draws));
  const double expected = draws / 7.0;
  const double sd = std::sqrt(draws * (1.0 / 7) * (6.0 / 7));
  for (int h : hist) EXPECT_NEAR(h, expected, 4 * sd);
}
