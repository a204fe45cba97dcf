// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "altsum/polylog.hpp"
#include "oracles.hpp"

using namespace altsum;

namespace {

const double kPi = static_cast<double>(oracle::pi());
const double kLn2 = static_cast<double>(oracle::ln2());
const double kZeta3 = static_cast<double>(oracle::zeta3());

std::vector<double> unit_grid(int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(static_cast<double>(i) / (points - 1));
  return g;
}

} // namespace

TEST(Polylog, DomainChecked) {
  EXPECT_THROW(li2(1.0000001), DomainError);
  EXPECT_THROW(li3(-1.5), DomainError);
  EXPECT_THROW(li2(NAN), DomainError);
  EXPECT_THROW(detail::polylog_series(0.6, 2), DomainError);
}

TEST(Polylog, SpecialValues) {
  EXPECT_EQ(li2(0.0).value(), 0.0);
  EXPECT_EQ(li2(0.0).abs_error(), 0.0);
  EXPECT_EQ(li3(0.0).value(), 0.0);
  EXPECT_NEAR(li2(-1.0).value(), -kPi * kPi / 12, 1e-15);
  EXPECT_NEAR(li2(0.5).value(), kPi * kPi / 12 - kLn2 * kLn2 / 2, 1e-15);
  EXPECT_NEAR(li3(0.5).value(), 7.0 / 8 * kZeta3 - kPi * kPi * kLn2 / 12 + kLn2 * kLn2 * kLn2 / 6, 1e-15);
  EXPECT_NEAR(li3(-1.0).value(), -0.75 * kZeta3, 1e-15);
  EXPECT_NEAR(li2(1.0).value(), kPi * kPi / 6, 1e-13);
  EXPECT_NEAR(li3(1.0).value(), kZeta3, 1e-13);
  EXPECT_NEAR(li2(0.5).value(), 0.5822405265, 1e-10);
  EXPECT_NEAR(li3(0.5).value(), 0.5372131936, 1e-10);
  EXPECT_NEAR(li3(-1.0).value(), -0.9015426774, 1e-10);
}

TEST(Polylog, AgreesWithLongDoubleSeries) {
  for (double t = -0.9; t <= 0.9001; t += 0.05) {
    EXPECT_NEAR(li2(t).value(), static_cast<double>(oracle::polylog(2, t)), 2e-15) << t;
    EXPECT_NEAR(li3(t).value(), static_cast<double>(oracle::polylog(3, t)), 2e-15) << t;
    EXPECT_TRUE(li2(t).contains(static_cast<double>(oracle::polylog(2, t)), 1e-16)) << t;
  }
}

TEST(Polylog, ErrorBoundsStayBelowContract) {
  for (double t = -1.0; t <= 1.0; t += 1.0 / 64) {
    EXPECT_LE(li2(t).abs_error(), 1e-13) << t;
    EXPECT_LE(li3(t).abs_error(), 1e-13) << t;
  }
}

TEST(PolylogProperty, DilogDuplication) {
  for (double t : unit_grid(50)) {
    const double r = li2(t).value() + li2(-t).value() - 0.5 * li2(t * t).value();
    EXPECT_LE(std::fabs(r), 1e-12) << "t=" << t;
  }
}

TEST(PolylogProperty, TrilogDuplication) {
  for (double t : unit_grid(50)) {
    const double r = li3(t).value() + li3(-t).value() - 0.25 * li3(t * t).value();
    EXPECT_LE(std::fabs(r), 1e-12) << "t=" << t;
  }
}

TEST(PolylogProperty, DilogReflection) {
  for (int i = 1; i < 100; ++i) {
    const double t = i / 100.0;
    const double r = li2(t).value() + li2(1.0 - t).value() - (kPi * kPi / 6 - std::log(t) * std::log1p(-t));
    EXPECT_LE(std::fabs(r), 1e-12) << "t=" << t;
  }
}

TEST(PolylogProperty, DerivativeOfDilog) {
  for (double t : {-0.3, 0.3, 0.5}) {
    const double h = 1e-5;
    const double fd = (li2(t + h).value() - li2(t - h).value()) / (2 * h);
    const double exact = -std::log1p(-t) / t;
    EXPECT_LE(std::fabs(fd - exact) / std::fabs(exact), 1e-6) << "t=" << t;
  }
}

TEST(PolylogProperty, TrilogDerivativeIsDilogOverT) {
  for (double t : {-0.7, -0.3, 0.3, 0.6, 0.8}) {
    const double h = 1e-5;
    const double fd = (li3(t + h).value() - li3(t - h).value()) / (2 * h);
    EXPECT_LE(std::fabs(fd - li2(t).value() / t) / std::fabs(li2(t).value() / t), 1e-6) << "t=" << t;
  }
}

TEST(PolylogProperty, ContinuousAcrossBranchPoints) {
  for (double b : {-0.5, 0.5}) {
    const double lo = std::nextafter(b, -1.0), hi = std::nextafter(b, 1.0);
    EXPECT_NEAR(li2(lo).value(), li2(hi).value(), 1e-15) << b;
    EXPECT_NEAR(li3(lo).value(), li3(hi).value(), 1e-15) << b;
  }
  EXPECT_NEAR(li2(std::nextafter(1.0, 0.0)).value(), kPi * kPi / 6, 1e-6);
}
