// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numeric>

#include "altsum/quad.hpp"
#include "oracles.hpp"

using namespace altsum;

namespace {

const double kPi = static_cast<double>(oracle::pi());
const double kLn2 = static_cast<double>(oracle::ln2());
const double kZeta3 = static_cast<double>(oracle::zeta3());
const double kCatalan = static_cast<double>(oracle::catalan());

double sigma1_integrand(double x, double y) { return 1.0 / ((1 + x * y) * (1 + x) * (1 + y)); }
double sigma_integrand(double x, double y) { return std::log1p(x * y) / ((1 + x) * (1 + y)); }
double sigma2_integrand(double x, double y) {
  const double p = x * x * y * y;
  return p / ((1 + p) * (1 + x) * (1 + y));
}

} // namespace

TEST(GaussLegendre, SmallOrders) {
  const QuadRule one = gl_nodes(1);
  ASSERT_EQ(one.nodes.size(), 1u);
  EXPECT_EQ(one.nodes[0], 0.0);
  EXPECT_DOUBLE_EQ(one.weights[0], 2.0);
  const QuadRule two = gl_nodes(2);
  EXPECT_NEAR(two.nodes[0], -1.0 / std::sqrt(3.0), 2.3e-16);
  EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(3.0), 2.3e-16);
  EXPECT_NEAR(two.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(two.weights[1], 1.0, 1e-15);
  EXPECT_THROW(gl_nodes(0), UsageError);
  EXPECT_THROW(gl_nodes(129), UsageError);
}

TEST(GaussLegendre, NodesAscendingWeightsSumToTwo) {
  for (int n : {3, 15, 31, 64, 128}) {
    const QuadRule r = gl_nodes(n);
    EXPECT_TRUE(std::is_sorted(r.nodes.begin(), r.nodes.end())) << n;
    EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 2.0, 1e-13) << n;
  }
}

TEST(GaussLegendre, PolynomialExactness) {
  for (int n = 1; n <= 20; ++n) {
    const QuadRule r = gl_nodes(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      long double q = 0;
      for (int i = 0; i < n; ++i) q += static_cast<long double>(r.weights[i]) * std::pow((long double)r.nodes[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      EXPECT_NEAR(static_cast<double>(q), exact, 1e-12) << "n=" << n << " d=" << d;
    }
  }
  const QuadRule r20 = gl_nodes(20);
  double q = 0;
  for (int i = 0; i < 20; ++i) q += r20.weights[i] * std::pow(r20.nodes[i], 38);
  EXPECT_NEAR(q, 2.0 / 39, 1e-14);
}

TEST(Integrate1d, Elementary) {
  const QuadResult r = integrate_1d([](double x) { return x; }, 0, 1, 1e-12);
  EXPECT_NEAR(r.value.value(), 0.5, 1e-14);
  EXPECT_GT(r.evals, 0);
  EXPECT_NEAR(integrate_1d([](double x) { return std::exp(x); }, 0, 2, 1e-12).value.value(), std::expm1(2.0), 1e-12);
}

TEST(Integrate1d, LogarithmicEndpoint) {
  const QuadResult r = integrate_1d([](double x) { return std::log1p(-x) / (1 + x); }, 0, 1, 1e-11, Singular::right);
  EXPECT_NEAR(r.value.value(), kLn2 * kLn2 / 2 - kPi * kPi / 12, 1e-10);
  EXPECT_NEAR(r.value.value(), -0.5822405265, 1e-10);
}

TEST(Integrate1d, SquaredLogOverT) {
  const QuadResult r =
      integrate_1d([](double t) { return std::pow(std::log1p(-t), 2) / t; }, 0, 0.5, 1e-12);
  // zeta(3)/4 - ln^3 2 / 3
  EXPECT_NEAR(r.value.value(), kZeta3 / 4 - kLn2 * kLn2 * kLn2 / 3, 1e-11);
  EXPECT_NEAR(r.value.value(), 0.1895060085, 1e-10);
}

TEST(Integrate1d, SingularEnds) {
  // int_0^1 ln x ln(1-x) dx = 2 - pi^2/6
  const QuadResult both =
      integrate_1d([](double x) { return std::log(x) * std::log1p(-x); }, 0, 1, 1e-11, Singular::both);
  EXPECT_NEAR(both.value.value(), 2 - kPi * kPi / 6, 1e-10);
  const QuadResult left = integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, 1e-11, Singular::left);
  EXPECT_NEAR(left.value.value(), 2.0, 1e-10);
}

TEST(Integrate1d, SplittingInvariance) {
  const auto f = [](double x) { return std::log1p(x) / (1 + x * x); };
  const double tol = 1e-11;
  const double whole = integrate_1d(f, 0, 1, tol).value.value();
  // exact value pi/8 ln 2
  EXPECT_NEAR(whole, kPi / 8 * kLn2, tol);
  for (double m : {0.01, 0.25, 0.5, 0.77, 0.999}) {
    const double split = integrate_1d(f, 0, m, tol).value.value() + integrate_1d(f, m, 1, tol).value.value();
    EXPECT_LE(std::fabs(whole - split), 2 * tol) << "m=" << m;
  }
}

TEST(Integrate1d, NonFiniteSampleNamesAbscissa) {
  try {
    integrate_1d([](double x) { return x > 0.3 ? NAN : 1.0; }, 0, 1, 1e-10);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_NE(std::string(e.what()).find("non-finite"), std::string::npos);
  }
  EXPECT_THROW(integrate_1d([](double) { return 1.0; }, 1, 0, 1e-10), UsageError);
  EXPECT_THROW(integrate_1d([](double) { return 1.0; }, 0, 1, 0.0), UsageError);
}

TEST(TanhSinh, EndpointSingularity) {
  const QuadResult r = integrate_tanh_sinh([](double x) { return std::log(x); }, 0, 1, 1e-12);
  EXPECT_NEAR(r.value.value(), -1.0, 1e-12);
}

TEST(UnitSquare, MainIntegrands) {
  const QuadResult s1 = integrate_unit_square(sigma1_integrand, 1e-12);
  EXPECT_NEAR(s1.value.value(), kPi * kPi / 24, 1e-11);
  const QuadResult s = integrate_unit_square(sigma_integrand, 1e-12);
  EXPECT_NEAR(s.value.value(), kPi * kPi / 12 * kLn2 + kLn2 * kLn2 * kLn2 / 3 - kZeta3 / 2, 1e-11);
  const QuadResult s2 = integrate_unit_square(sigma2_integrand, 1e-12);
  const double minus_sigma2 = 7.0 / 8 * kLn2 * kLn2 + kPi / 8 * kLn2 - kCatalan / 2 - kPi * kPi / 48;
  EXPECT_NEAR(s2.value.value(), minus_sigma2, 1e-10);
  EXPECT_NEAR(s2.value.value(), 0.0289951, 1e-7);
}

TEST(UnitSquare, AnalyticIntegrandsConvergeFast) {
  for (auto f : {sigma1_integrand, sigma_integrand, sigma2_integrand}) {
    const double d = tensor_gl(f, 64).value() - tensor_gl(f, 32).value();
    EXPECT_LE(std::fabs(d), 1e-10);
  }
}

TEST(UnitSquare, TensorExactForLowDegree) {
  EXPECT_NEAR(tensor_gl([](double x, double y) { return x * x * y; }, 2).value(), 1.0 / 6, 1e-15);
}
