// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "altsum/harmonic.hpp"
#include "oracles.hpp"

using namespace altsum;

TEST(HarmonicStream, FirstTerms) {
  HarmonicStream s;
  EXPECT_EQ(s.current().n, 0);
  const HarmonicTriple one = s.next();
  EXPECT_EQ(one, (HarmonicTriple{1, 1.0, 1.0, 1.0}));
  const HarmonicTriple two = s.next();
  EXPECT_EQ(two.h, 1.5);
  EXPECT_EQ(two.h_minus, 0.5);
  EXPECT_EQ(two.h2, 1.25);
}

TEST(HarmonicStream, RandomAccessRestarts) {
  HarmonicStream s;
  const double h10 = s.at(10).h;
  s.at(20);
  EXPECT_EQ(s.at(10).h, h10);
  EXPECT_THROW(s.at(-1), UsageError);
  EXPECT_TRUE(harmonic_stream(0).empty());
}

TEST(HarmonicStream, MatchesNaiveLongDoubleSums) {
  const auto triples = harmonic_stream(1000);
  ASSERT_EQ(triples.size(), 1000u);
  long double h = 0, hm = 0, h2 = 0;
  for (int n = 1; n <= 1000; ++n) {
    h += 1.0L / n;
    hm += (n % 2 ? 1.0L : -1.0L) / n;
    h2 += 1.0L / (static_cast<long double>(n) * n);
    const auto& t = triples[n - 1];
    ASSERT_EQ(t.n, n);
    EXPECT_NEAR(t.h, static_cast<double>(h), 1e-13);
    EXPECT_NEAR(t.h_minus, static_cast<double>(hm), 1e-13);
    EXPECT_NEAR(t.h2, static_cast<double>(h2), 1e-13);
  }
}

TEST(HarmonicStream, SecondOrderLimit) {
  HarmonicStream s;
  const double pi = static_cast<double>(oracle::pi());
  // tail sum_{k>n} 1/k^2 < 1/n
  EXPECT_NEAR(s.at(1'000'000).h2, pi * pi / 6, 1e-6);
  EXPECT_LT(s.current().h2, pi * pi / 6);
}

TEST(InnerSum, SmallIndices) {
  EXPECT_NEAR(inner_sum(0).value(), 0.6931471806, 1e-10);
  EXPECT_NEAR(inner_sum(1).value(), 0.3068528194, 1e-10);
  // digamma and quadrature oracles agree on this value
  EXPECT_NEAR(inner_sum(5).value(), 0.0901861528, 1e-10);
  EXPECT_THROW(inner_sum(-1), UsageError);
}

TEST(InnerSum, AgreesWithDigammaOracle) {
  for (std::int64_t n : {0, 1, 2, 3, 5, 10, 37, 100, 1000, 10000, 123456}) {
    const PreciseValue v = inner_sum(n);
    const double want = static_cast<double>(oracle::inner_sum(n));
    EXPECT_NEAR(v.value(), want, 1e-15) << "n=" << n;
    EXPECT_TRUE(v.contains(want, 1e-17)) << "n=" << n << " err " << v.abs_error();
  }
}

TEST(InnerSum, AgreesWithQuadratureOracle) {
  for (int n : {0, 1, 2, 5, 10}) {
    const long double q = oracle::simpson([n](long double x) { return std::pow(x, n) / (1 + x); }, 0.0L, 1.0L, 4000);
    EXPECT_NEAR(inner_sum(n).value(), static_cast<double>(q), 1e-12) << "n=" << n;
  }
}

TEST(InnerSum, RecurrenceProperty) {
  InnerSumCursor cursor;
  double prev = cursor.at(0).value();
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const double cur = cursor.at(n).value();
    ASSERT_NEAR(cur + prev, 1.0 / static_cast<double>(n), 1e-12) << "n=" << n;
    prev = cur;
  }
}

TEST(InnerSum, PositiveAndStrictlyDecreasing) {
  InnerSumCursor cursor;
  double prev = cursor.at(0).value();
  for (std::int64_t n = 1; n <= 10000; ++n) {
    const double cur = cursor.at(n).value();
    ASSERT_GT(cur, 0.0) << "n=" << n;
    ASSERT_LT(cur, prev) << "n=" << n;
    prev = cur;
  }
}

TEST(InnerSum, CursorMatchesDirect) {
  InnerSumCursor cursor;
  for (std::int64_t n : {0, 3, 17, 500, 4096}) EXPECT_EQ(cursor.at(n).value(), inner_sum(n).value()) << n;
}

TEST(InnerSum, AlternatingTailBracket) {
  for (std::int64_t n = 1; n <= 10000; n += (n < 100 ? 1 : 97)) {
    const double gap = inner_sum(n).value(); // |ln 2 - H_n^-|
    const double nd = static_cast<double>(n);
    EXPECT_GE(gap, 1.0 / (2 * nd + 2)) << n;
    EXPECT_LE(gap, 1.0 / (2 * nd)) << n;
  }
}
