// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <memory>
#include <tuple>

#include "altsum/accel.hpp"
#include "altsum/harmonic.hpp"
#include "altsum/polylog.hpp"
#include "altsum/quad.hpp"

namespace altsum {

namespace {

constexpr std::array<std::string_view, 5> kRouteNames{"SERIES_DIRECT", "SERIES_CVZ", "QUAD_1D", "QUAD_2D",
                                                      "POLYLOG_EXPR"};

// Route tolerances.
constexpr double kTolSeries = 1e-11;
constexpr double kTolQuad = 1e-9;
constexpr double kTolQuad2dSigma2 = 1e-8;
constexpr double kTolCoarse = 1e-6;

constexpr int kCvzTerms = 60;

const std::string kMainGroup = "Main series and double integrals";
const std::string kReductionGroup = "Inner integral and polylogarithm reduction";
const std::string kEulerGroup = "Euler sums and generating functions";

//----------------------------------------------------------------------
// Small numeric helpers.

PreciseValue K(Constant c) { return constant(c); }
PreciseValue num(double x) { return PreciseValue::exact(x); }

ClosedForm M(Rational coeff, int pi = 0, int ln2 = 0, int zeta3 = 0, int catalan = 0) {
  return ClosedForm::monomial(coeff, pi, ln2, zeta3, catalan);
}

/// ln(1 - t) for t < 1.
PreciseValue log_one_minus(double t) {
  const double v = std::log1p(-t);
  return {v, ulp(v)};
}

/// (1/2) ln^2 2 - pi^2/12
PreciseValue half_ln2sq_minus_pi2_12() {
  const PreciseValue l = K(Constant::LN2);
  const PreciseValue p = K(Constant::PI);
  return l * l * num(0.5) - p * p / num(12.0);
}

/// Li2((1-x)/2) - Li2(-x) + (1/2) ln^2 2 - pi^2/12, valid for |x| <= 1.
PreciseValue inner_integral_closed(double x) {
  const double half = 0.5 * (1.0 - x); // exact for |x| <= 1 up to one rounding
  return (li2(half) - li2(-x) + half_ln2sq_minus_pi2_12()).widened(ulp(half));
}

//----------------------------------------------------------------------
// Series builders. Term callbacks hold a shared cursor so that the
// sequential access pattern of the summation routines costs O(1) per term.

using HarmonicCoefficient = double (*)(const HarmonicTriple&);

// sum_{n>=1} c(H_n) t^n for harmonic coefficients c > 0 and |t| <= 1.
SeriesSpec harmonic_power_series(std::string name, double t, HarmonicCoefficient coeff) {
  SeriesSpec s;
  s.name = std::move(name);
  s.start = 1;
  const double r = std::fabs(t);
  auto stream = std::make_shared<HarmonicStream>();
  s.magnitude = [stream, r, coeff](std::int64_t n) {
    const double c = coeff(stream->at(n));
    return r == 1.0 ? c : c * std::pow(r, static_cast<double>(n));
  };
  if (t < 0.0) {
    s.pattern = SignPattern::alternating;
    s.leading_sign = -1.0;
    s.decay = r < 1.0 ? DecayClass::geometric(0.5 * (1.0 + r)) : DecayClass::power_law(1.0);
  } else {
    s.pattern = SignPattern::positive;
    s.decay = DecayClass::geometric(0.5 * (1.0 + r));
  }
  // Coefficient ratios c_{n+1}/c_n are below (1+r)/(2r) from here on for every
  // coefficient family used below and |t| <= 0.9; at |t| = 1 the coefficient
  // sequences are themselves decreasing.
  s.monotone_from = r < 1.0 ? 64 : 1;
  return s;
}

// sum_{n>=start} (-1)^(n-start) c(H_n).
SeriesSpec harmonic_alternating(std::string name, std::int64_t start, HarmonicCoefficient coeff) {
  SeriesSpec s;
  s.name = std::move(name);
  s.start = start;
  s.pattern = SignPattern::alternating;
  s.decay = DecayClass::power_law(1.0);
  s.monotone_from = start;
  auto stream = std::make_shared<HarmonicStream>();
  s.magnitude = [stream, coeff](std::int64_t n) { return coeff(stream->at(n)); };
  return s;
}

double h_over_n(const HarmonicTriple& h) { return h.h / static_cast<double>(h.n); }
double h_over_n2(const HarmonicTriple& h) {
  const double n = static_cast<double>(h.n);
  return h.h / (n * n);
}
double h2_plain(const HarmonicTriple& h) { return h.h2; }
double h_plain(const HarmonicTriple& h) { return h.h; }
double h2_over_n(const HarmonicTriple& h) { return h.h2 / static_cast<double>(h.n); }
double h2_over_n_plus_1(const HarmonicTriple& h) { return h.h2 / static_cast<double>(h.n + 1); }
double hminus_over_n(const HarmonicTriple& h) { return h.h_minus / static_cast<double>(h.n); }
double lemma_coefficient(const HarmonicTriple& h) {
  const double n = static_cast<double>(h.n);
  return h.h2 / n + 2.0 * h.h / (n * n);
}
double two_h_over_n2(const HarmonicTriple& h) { return 2.0 * h_over_n2(h); }
// ln 2 + H_n over n: regrouped skew-harmonic summand, see the REM2_SER entry.
double ln2_plus_h_over_n(const HarmonicTriple& h) {
  return (constant(Constant::LN2).value() + h.h) / static_cast<double>(h.n);
}

// Outer series of the main sums, built on I_n = (-1)^n (ln 2 - H_n^-).
enum class OuterKind { sigma, sigma1, sigma2 };

SeriesSpec outer_series(OuterKind kind) {
  SeriesSpec s;
  s.pattern = SignPattern::alternating;
  s.decay = DecayClass::power_law(kind == OuterKind::sigma ? 3.0 : 2.0);
  auto cursor = std::make_shared<InnerSumCursor>();
  switch (kind) {
  case OuterKind::sigma:
    s.name = "sum (-1)^(n-1) I_n^2 / n";
    s.start = 1;
    s.magnitude = [cursor](std::int64_t n) {
      const double i = cursor->at(n).value();
      return i * i / static_cast<double>(n);
    };
    break;
  case OuterKind::sigma1:
    s.name = "sum (-1)^n I_n^2";
    s.start = 0;
    s.magnitude = [cursor](std::int64_t n) {
      const double i = cursor->at(n).value();
      return i * i;
    };
    break;
  case OuterKind::sigma2:
    s.name = "sum (-1)^n I_2n^2";
    s.start = 1;
    s.leading_sign = -1.0;
    s.magnitude = [cursor](std::int64_t n) {
      const double i = cursor->at(2 * n).value();
      return i * i;
    };
    break;
  }
  s.monotone_from = s.start;
  return s;
}

//----------------------------------------------------------------------
// Route factories.

using SeriesBuilder = std::function<SeriesSpec(std::optional<double>)>;

RouteOutcome from_sum(const SumResult& r, PreciseValue offset = PreciseValue::exact(0.0)) {
  return {r.value + offset, r.terms_used};
}

RoutePlan cvz_route(double tol, SeriesBuilder build, std::string method,
                    std::function<bool(double)> covers = {}) {
  RoutePlan p;
  p.route = Route::SERIES_CVZ;
  p.tolerance = tol;
  p.method = std::move(method);
  p.covers = std::move(covers);
  p.evaluate = [build = std::move(build)](std::optional<double> param) {
    return from_sum(sum_cvz(build(param), kCvzTerms));
  };
  return p;
}

// Direct summation stops at half the tolerance so the tail bound alone
// cannot exhaust it.
RoutePlan direct_route(double tol, SeriesBuilder build, std::string method,
                       std::function<bool(double)> covers = {}) {
  RoutePlan p;
  p.route = Route::SERIES_DIRECT;
  p.tolerance = tol;
  p.method = std::move(method);
  p.covers = std::move(covers);
  p.evaluate = [build = std::move(build), tol](std::optional<double> param) {
    SeriesSpec s = build(param);
    // geometric tails are cheap, so leave a wide margin; power-law tails get
    // half the tolerance and stay within the term budget
    const double target = s.decay.kind == DecayClass::Kind::geometric ? 0.05 * tol : 0.5 * tol;
    return from_sum(sum_direct(s, target));
  };
  return p;
}

RoutePlan custom_route(Route route, double tol, ParamFn fn, std::string method,
                       std::function<bool(double)> covers = {}) {
  RoutePlan p;
  p.route = route;
  p.tolerance = tol;
  p.evaluate = std::move(fn);
  p.method = std::move(method);
  p.covers = std::move(covers);
  return p;
}

RouteOutcome quad_1d(const Integrand& f, double a, double b, double tol, Singular singular = Singular::none) {
  const QuadResult q = integrate_1d(f, a, b, tol, singular);
  return {q.value, q.evals};
}

RouteOutcome quad_2d(const Integrand2& f, double tol) {
  const QuadResult q = integrate_unit_square(f, tol);
  return {q.value, q.evals};
}

double require(std::optional<double> p) {
  if (!p) throw UsageError("parameter required");
  return *p;
}

bool is_negative(double t) { return t < 0.0; }
bool below_one(double t) { return t >= 0.0 && t < 1.0; }
bool strictly_inside(double x) { return x > -1.0 && x < 1.0; }

//----------------------------------------------------------------------
// Integrands.

double log_square_over(double s) {
  const double l = std::log1p(-s);
  return l * l / s;
}

PreciseValue j1_polylog() {
  // J1 = ln 2 Li2(1/2) - L(1/2)
  return K(Constant::LN2) * li2(0.5) - log_square_integral_closed(0.5);
}

PreciseValue j2_polylog() {
  // sum H_n^(2) (-1)^(n-1)/n from the t = -1 value of the lemma (signs flip
  // since t^n = (-1)^n), using sum (-1)^(n-1) H_n/n^2 = (5/8) zeta(3); then
  // J2 = -that - Li3(-1).
  const PreciseValue li3m1 = li3(-1.0);
  const PreciseValue alt_h2 = li2(-1.0) * K(Constant::LN2) - num(3.0) * li3m1 -
                              num(2.0) * eval_closed_form(M({5, 8}, 0, 0, 1));
  return -alt_h2 - li3m1;
}

std::vector<double> gf_grid() { return {-0.9, -0.75, -0.5, -0.25, 0.25, 0.5, 0.75}; }

//----------------------------------------------------------------------
// Registry construction.

std::vector<Identity> build_registry() {
  std::vector<Identity> out;

  auto scalar = [&](std::string id, std::string section, std::string description, std::string anchor,
                    ClosedForm rhs, std::vector<RoutePlan> routes) {
    Identity e;
    e.id = std::move(id);
    e.section = std::move(section);
    e.description = std::move(description);
    e.anchor = std::move(anchor);
    e.rhs_text = rhs.str();
    e.rhs_closed_form = std::move(rhs);
    e.routes = std::move(routes);
    out.push_back(std::move(e));
  };

  auto parametric = [&](std::string id, std::string section, std::string description, std::string anchor,
                        std::string param_name, std::vector<double> grid, std::function<bool(double)> domain,
                        std::string rhs_text, std::function<PreciseValue(double)> rhs,
                        std::vector<RoutePlan> routes) {
    Identity e;
    e.id = std::move(id);
    e.section = std::move(section);
    e.description = std::move(description);
    e.anchor = std::move(anchor);
    e.param_name = std::move(param_name);
    e.param_grid = std::move(grid);
    e.param_domain = std::move(domain);
    e.rhs_text = std::move(rhs_text);
    e.rhs_parametric = std::move(rhs);
    e.routes = std::move(routes);
    out.push_back(std::move(e));
  };

  const ClosedForm sigma_cf = M({1, 12}, 2, 1) + M({1, 3}, 0, 3) - M({1, 2}, 0, 0, 1);

  // --- Main series -----------------------------------------------------

  scalar("SIGMA1", kMainGroup, "sum_{n>=0} (-1)^n I_n^2 = pi^2/24",
         "sigma_1 = sum_{n>=0} (-1)^n (sum_{k>=1} (-1)^(k-1)/(n+k))^2 = pi^2/24 = "
         "int int dx dy/((1+xy)(1+x)(1+y))",
         M({1, 24}, 2),
         {cvz_route(kTolSeries, [](auto) { return outer_series(OuterKind::sigma1); }, "CVZ on I_n^2"),
          custom_route(Route::QUAD_2D, kTolQuad,
                       [](auto) {
                         return quad_2d([](double x, double y) { return 1.0 / ((1.0 + x * y) * (1.0 + x) * (1.0 + y)); },
                                        kTolQuad / 10.0);
                       },
                       "unit square, 1/((1+xy)(1+x)(1+y))")});

  scalar("SIGMA2", kMainGroup, "sum_{n>=1} (-1)^n I_2n^2 = G/2 + pi^2/48 - 7/8 ln^2 2 - (pi/8) ln 2",
         "sigma_2 = sum_{n>=1} (-1)^n (sum_{k>=1} (-1)^(k-1)/(2n+k))^2; "
         "-sigma_2 = int int x^2 y^2/((1+x^2 y^2)(1+x)(1+y)) dx dy",
         M({1, 2}, 0, 0, 0, 1) + M({1, 48}, 2) - M({7, 8}, 0, 2) - M({1, 8}, 1, 1),
         {cvz_route(kTolSeries, [](auto) { return outer_series(OuterKind::sigma2); }, "CVZ on I_2n^2"),
          custom_route(Route::QUAD_2D, kTolQuad2dSigma2,
                       [](auto) {
                         RouteOutcome r = quad_2d(
                             [](double x, double y) {
                               const double p = x * x * y * y;
                               return p / ((1.0 + p) * (1.0 + x) * (1.0 + y));
                             },
                             kTolQuad2dSigma2 / 10.0);
                         r.value = -r.value;
                         return r;
                       },
                       "minus the unit-square integral of x^2y^2/((1+x^2y^2)(1+x)(1+y))")});

  scalar("SIGMA", kMainGroup, "sum_{n>=1} (-1)^(n-1) I_n^2 / n = pi^2/12 ln 2 + ln^3 2 / 3 - zeta(3)/2",
         "sigma = sum_{n>=1} (-1)^(n-1)/n (ln 2 - H_n^-)^2 = pi^2/12 ln 2 + (ln 2)^3/3 - zeta(3)/2 ~ 0.08007",
         sigma_cf,
         {cvz_route(kTolSeries, [](auto) { return outer_series(OuterKind::sigma); }, "CVZ on I_n^2/n"),
          custom_route(Route::QUAD_2D, kTolQuad,
                       [](auto) {
                         return quad_2d([](double x, double y) { return std::log1p(x * y) / ((1.0 + x) * (1.0 + y)); },
                                        kTolQuad / 10.0);
                       },
                       "unit square, ln(1+xy)/((1+x)(1+y))")});

  // --- Reduction to polylogarithms -------------------------------------

  scalar("SIGMA_DECOMP", kReductionGroup, "sigma = J1 + J2 + (ln^2 2 / 2 - pi^2/12) ln 2",
         "sigma = J_1 + J_2 + ((ln 2)^2/2 - pi^2/12) ln 2", sigma_cf,
         {custom_route(Route::POLYLOG_EXPR, kTolSeries,
                       [](auto) {
                         const PreciseValue v = j1_polylog() + j2_polylog() + half_ln2sq_minus_pi2_12() * K(Constant::LN2);
                         return RouteOutcome{v, 12};
                       },
                       "J1 via the ln^2(1-s)/s antiderivative, J2 via Li3(-1), Li2(-1) and (5/8) zeta(3)"),
          custom_route(Route::QUAD_1D, kTolQuad,
                       [](auto) {
                         const RouteOutcome j1 = quad_1d(
                             [](double x) { return li2(0.5 * (1.0 - x)).value() / (1.0 + x); }, 0.0, 1.0, kTolQuad / 20.0);
                         const RouteOutcome j2 = quad_1d([](double x) { return -li2(-x).value() / (1.0 + x); }, 0.0, 1.0,
                                                         kTolQuad / 20.0);
                         const PreciseValue v = j1.value + j2.value + half_ln2sq_minus_pi2_12() * K(Constant::LN2);
                         return RouteOutcome{v, j1.evals + j2.evals};
                       },
                       "J1 and J2 by adaptive quadrature")});

  parametric("INNER_REP", kReductionGroup, "I_n = sum_{k>=1} (-1)^(k-1)/(n+k) = (-1)^n (ln 2 - H_n^-)",
             "int_0^1 x^n/(1+x) dx = sum_{k>=1} (-1)^(k-1)/(n+k) = (ln 2 - H_n^-)(-1)^n", "n",
             {0, 1, 2, 5, 10, 100},
             [](double n) { return n >= 0.0 && n <= 1e6 && std::floor(n) == n; }, "(-1)^n (ln 2 - H_n^-)",
             [](double n) { return inner_sum(static_cast<std::int64_t>(n)); },
             {direct_route(
                  kTolCoarse,
                  [](std::optional<double> p) {
                    const auto n = static_cast<std::int64_t>(require(p));
                    SeriesSpec s;
                    s.name = "sum (-1)^(k-1)/(n+k)";
                    s.start = 1;
                    s.decay = DecayClass::power_law(1.0);
                    s.magnitude = [n](std::int64_t k) { return 1.0 / static_cast<double>(n + k); };
                    return s;
                  },
                  "partial sums of sum (-1)^(k-1)/(n+k) with alternating tail bound"),
              cvz_route(
                  kTolSeries,
                  [](std::optional<double> p) {
                    const auto n = static_cast<std::int64_t>(require(p));
                    SeriesSpec s;
                    s.name = "sum (-1)^(k-1)/(n+k)";
                    s.start = 1;
                    s.magnitude = [n](std::int64_t k) { return 1.0 / static_cast<double>(n + k); };
                    return s;
                  },
                  "CVZ on 1/(n+k)"),
              custom_route(
                  Route::QUAD_1D, kTolQuad,
                  [](std::optional<double> p) {
                    const double n = require(p);
                    return quad_1d([n](double x) { return std::pow(x, n) / (1.0 + x); }, 0.0, 1.0, kTolQuad / 10.0);
                  },
                  "int_0^1 x^n/(1+x) dx")});

  parametric("EQ1", kReductionGroup, "int_0^1 ln(1+xy)/(1+y) dy = ln 2 ln(1-x) + sum x^n H_n^- / n",
             "int_0^1 ln(1+xy)/(1+y) dy = ln 2 ln(1-x) + sum_{n>=1} x^n H_n^-/n, |x| < 1", "x",
             {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75}, strictly_inside,
             "Li2((1-x)/2) - Li2(-x) + ln^2 2 / 2 - pi^2/12", inner_integral_closed,
             {custom_route(
                  Route::QUAD_1D, kTolQuad,
                  [](std::optional<double> p) {
                    const double x = require(p);
                    return quad_1d([x](double y) { return std::log1p(x * y) / (1.0 + y); }, 0.0, 1.0, kTolQuad / 10.0);
                  },
                  "int_0^1 ln(1+xy)/(1+y) dy"),
              custom_route(
                  Route::SERIES_DIRECT, kTolSeries,
                  [](std::optional<double> p) {
                    const double x = require(p);
                    const SumResult r =
                        sum_direct(harmonic_power_series("sum x^n H_n^-/n", x, hminus_over_n), kTolSeries / 10.0);
                    return from_sum(r, K(Constant::LN2) * log_one_minus(x));
                  },
                  "ln 2 ln(1-x) + partial sums of sum x^n H_n^-/n")});

  parametric("EQ2", kReductionGroup, "int_0^1 ln(1+xy)/(1+y) dy = Li2((1-x)/2) - Li2(-x) + ln^2 2 / 2 - pi^2/12",
             "int_0^1 ln(1+xy)/(1+y) dy = Li2((1-x)/2) - Li2(-x) + (ln 2)^2/2 - pi^2/12, |x| <= 1", "x",
             {-1.0, -0.5, 0.0, 0.5, 0.9, 1.0}, [](double x) { return x >= -1.0 && x <= 1.0; },
             "Li2((1-x)/2) - Li2(-x) + ln^2 2 / 2 - pi^2/12", inner_integral_closed,
             {custom_route(
                 Route::QUAD_1D, kTolQuad,
                 [](std::optional<double> p) {
                   const double x = require(p);
                   const Singular sing = x == -1.0 ? Singular::right : Singular::none;
                   return quad_1d([x](double y) { return std::log1p(x * y) / (1.0 + y); }, 0.0, 1.0, kTolQuad / 10.0,
                                  sing);
                 },
                 "int_0^1 ln(1+xy)/(1+y) dy (tanh-sinh at y=1 when x=-1)")});

  parametric("EQ3", kReductionGroup,
             "int_0^t ln^2(1-s)/s ds = ln t ln^2(1-t) + 2 ln(1-t) Li2(1-t) - 2 Li3(1-t) + 2 zeta(3)",
             "int_0^t ln^2(1-s)/s ds = ln t ln^2(1-t) + 2 ln(1-t) Li2(1-t) - 2 Li3(1-t) + 2 zeta(3)", "t",
             {0.1, 0.25, 0.5, 0.75}, [](double t) { return t > 0.0 && t < 1.0; },
             "ln t ln^2(1-t) + 2 ln(1-t) Li2(1-t) - 2 Li3(1-t) + 2 zeta(3)", log_square_integral_closed,
             {custom_route(
                 Route::QUAD_1D, kTolQuad,
                 [](std::optional<double> p) {
                   std::int64_t evals = 0;
                   const PreciseValue v = log_square_integral_quad(require(p), kTolQuad / 10.0, &evals);
                   return RouteOutcome{v, evals};
                 },
                 "int_0^t ln^2(1-s)/s ds")});

  scalar("INT_HALF", kReductionGroup, "int_0^(1/2) ln^2(1-t)/t dt = -ln^3 2 - 2 ln 2 Li2(1/2) - 2 Li3(1/2) + 2 zeta(3)",
         "int_0^{1/2} ln^2(1-t)/t dt = -(ln 2)^3 - 2 ln 2 Li2(1/2) - 2 Li3(1/2) + 2 zeta(3)",
         M({1, 4}, 0, 0, 1) - M({1, 3}, 0, 3),
         {custom_route(
              Route::QUAD_1D, kTolQuad,
              [](auto) {
                std::int64_t evals = 0;
                const PreciseValue v = log_square_integral_quad(0.5, kTolQuad / 10.0, &evals);
                return RouteOutcome{v, evals};
              },
              "int_0^(1/2) ln^2(1-t)/t dt"),
          custom_route(
              Route::POLYLOG_EXPR, kTolSeries,
              [](auto) {
                const PreciseValue l = K(Constant::LN2);
                const PreciseValue v = -(l * l * l) - num(2.0) * l * li2(0.5) - num(2.0) * li3(0.5) +
                                       num(2.0) * K(Constant::ZETA3);
                return RouteOutcome{v, 2};
              },
              "-ln^3 2 - 2 ln 2 Li2(1/2) - 2 Li3(1/2) + 2 zeta(3) with numeric Li2, Li3")});

  scalar("LI2_HALF", kReductionGroup, "Li2(1/2) = pi^2/12 - ln^2 2 / 2", "Li2(1/2) = pi^2/12 - (log 2)^2/2",
         M({1, 12}, 2) - M({1, 2}, 0, 2),
         {custom_route(Route::POLYLOG_EXPR, kTolSeries, [](auto) { return RouteOutcome{li2(0.5), 1}; }, "li2(0.5)"),
          direct_route(
              kTolSeries,
              [](auto) {
                SeriesSpec s;
                s.name = "sum 2^-n/n^2";
                s.pattern = SignPattern::positive;
                s.decay = DecayClass::geometric(0.5);
                s.magnitude = [](std::int64_t n) {
                  const double nd = static_cast<double>(n);
                  return std::ldexp(1.0, -static_cast<int>(n)) / (nd * nd);
                };
                return s;
              },
              "partial sums of sum 2^-n/n^2")});

  scalar("LI3_HALF", kReductionGroup, "Li3(1/2) = 7/8 zeta(3) - pi^2 ln 2 / 12 + ln^3 2 / 6",
         "Li3(1/2) = 7/8 zeta(3) - pi^2 log 2/12 + (log 2)^3/6",
         M({7, 8}, 0, 0, 1) - M({1, 12}, 2, 1) + M({1, 6}, 0, 3),
         {custom_route(Route::POLYLOG_EXPR, kTolSeries, [](auto) { return RouteOutcome{li3(0.5), 1}; }, "li3(0.5)"),
          direct_route(
              kTolSeries,
              [](auto) {
                SeriesSpec s;
                s.name = "sum 2^-n/n^3";
                s.pattern = SignPattern::positive;
                s.decay = DecayClass::geometric(0.5);
                s.magnitude = [](std::int64_t n) {
                  const double nd = static_cast<double>(n);
                  return std::ldexp(1.0, -static_cast<int>(n)) / (nd * nd * nd);
                };
                return s;
              },
              "partial sums of sum 2^-n/n^3")});

  scalar("J1", kReductionGroup, "J1 = int_0^1 Li2((1-x)/2)/(1+x) dx = pi^2/12 ln 2 - ln^3 2 / 6 - zeta(3)/4",
         "J_1 = int_0^1 Li2((1-x)/2)/(1+x) dx = pi^2/12 ln 2 - (ln 2)^3/6 - zeta(3)/4",
         M({1, 12}, 2, 1) - M({1, 6}, 0, 3) - M({1, 4}, 0, 0, 1),
         {custom_route(
              Route::QUAD_1D, kTolQuad,
              [](auto) {
                return quad_1d([](double x) { return li2(0.5 * (1.0 - x)).value() / (1.0 + x); }, 0.0, 1.0,
                               kTolQuad / 10.0);
              },
              "int_0^1 Li2((1-x)/2)/(1+x) dx"),
          custom_route(Route::POLYLOG_EXPR, kTolSeries, [](auto) { return RouteOutcome{j1_polylog(), 6}; },
                       "ln 2 Li2(1/2) minus the ln^2(1-s)/s antiderivative at 1/2")});

  scalar("J2", kReductionGroup, "J2 = -int_0^1 Li2(-x)/(1+x) dx = pi^2/12 ln 2 - zeta(3)/4",
         "J_2 = -int_0^1 Li2(-x)/(1+x) dx = sum (-1)^(n+1) H_n^(2)/(n+1) = pi^2/12 ln 2 - zeta(3)/4",
         M({1, 12}, 2, 1) - M({1, 4}, 0, 0, 1),
         {custom_route(
              Route::QUAD_1D, kTolQuad,
              [](auto) { return quad_1d([](double x) { return -li2(-x).value() / (1.0 + x); }, 0.0, 1.0, kTolQuad / 10.0); },
              "-int_0^1 Li2(-x)/(1+x) dx"),
          cvz_route(kTolSeries, [](auto) { return harmonic_alternating("sum (-1)^(n+1) H_n^(2)/(n+1)", 1, h2_over_n_plus_1); },
                    "CVZ on H_n^(2)/(n+1)"),
          direct_route(kTolCoarse,
                       [](auto) { return harmonic_alternating("sum (-1)^(n+1) H_n^(2)/(n+1)", 1, h2_over_n_plus_1); },
                       "partial sums of sum (-1)^(n+1) H_n^(2)/(n+1)")});

  scalar("REM2_INT", kReductionGroup, "int_0^1 ln(1-x)/(1+x) dx = ln^2 2 / 2 - pi^2/12",
         "int_0^1 ln(1-x)/(1+x) dx = (ln 2)^2/2 - pi^2/12", M({1, 2}, 0, 2) - M({1, 12}, 2),
         {custom_route(
             Route::QUAD_1D, kTolQuad,
             [](auto) {
               return quad_1d([](double x) { return std::log1p(-x) / (1.0 + x); }, 0.0, 1.0, kTolQuad / 10.0,
                              Singular::right);
             },
             "int_0^1 ln(1-x)/(1+x) dx, tanh-sinh at x=1")});

  // sum (-1)^(n-1) H_n^-/n converges conditionally and its summands are not
  // monotone (H_n^- oscillates about ln 2), which defeats both the
  // alternating tail bound and CVZ. Writing H_n^- = ln 2 + (-1)^(n-1) I_n
  // and sum_n I_n/n = sum_k (-1)^(k-1) H_k/k gives the equivalent series
  // sum (-1)^(n-1) (ln 2 + H_n)/n with decreasing summands.
  scalar("REM2_SER", kReductionGroup, "sum_{n>=1} (-1)^(n-1) H_n^- / n = ln^2 2 / 2 + pi^2/12",
         "sum_{n>=1} (-1)^(n-1)/n H_n^- = (ln 2)^2/2 + pi^2/12", M({1, 2}, 0, 2) + M({1, 12}, 2),
         {cvz_route(kTolSeries, [](auto) { return harmonic_alternating("sum (-1)^(n-1) (ln 2 + H_n)/n", 1, ln2_plus_h_over_n); },
                    "CVZ on (ln 2 + H_n)/n"),
          direct_route(kTolCoarse,
                       [](auto) { return harmonic_alternating("sum (-1)^(n-1) (ln 2 + H_n)/n", 1, ln2_plus_h_over_n); },
                       "partial sums of sum (-1)^(n-1) (ln 2 + H_n)/n")});

  // --- Euler sums and generating functions ------------------------------

  // Direct summation at t = -1 converges like H_n/n and only serves as the
  // coarse cross-check there.
  auto gf_routes = [](const char* name, HarmonicCoefficient coeff) {
    std::vector<RoutePlan> routes;
    auto direct_tol = [](double t) { return t == -1.0 ? kTolCoarse : kTolSeries; };
    RoutePlan direct = custom_route(
        Route::SERIES_DIRECT, kTolSeries,
        [name, coeff](std::optional<double> p) {
          const double t = require(p);
          const double target = t == -1.0 ? 0.5 * kTolCoarse : kTolSeries / 10.0;
          return from_sum(sum_direct(harmonic_power_series(name, t, coeff), target));
        },
        std::string("partial sums of ") + name);
    direct.param_tolerance = direct_tol;
    routes.push_back(std::move(direct));
    routes.push_back(cvz_route(
        kTolSeries, [name, coeff](std::optional<double> p) { return harmonic_power_series(name, require(p), coeff); },
        std::string("CVZ on ") + name, is_negative));
    return routes;
  };

  const auto gf_domain = [](double t) { return t >= -1.0 && t <= 0.9; };

  parametric("GF_H2", kEulerGroup, "sum H_n^(2) t^n = Li2(t)/(1-t)", "Li2(t)/(1-t) = sum_{n>=1} H_n^(2) t^n", "t",
             gf_grid(), [](double t) { return t > -1.0 && t <= 0.9; }, "Li2(t)/(1-t)",
             [](double t) { return li2(t) / (num(1.0) - num(t)); }, gf_routes("sum H_n^(2) t^n", h2_plain));

  parametric("GF_H", kEulerGroup, "sum H_n t^n = -ln(1-t)/(1-t)", "sum_{n>=1} H_n t^n = -ln(1-t)/(1-t)", "t", gf_grid(),
             [](double t) { return t > -1.0 && t <= 0.9; }, "-ln(1-t)/(1-t)",
             [](double t) { return -log_one_minus(t) / (num(1.0) - num(t)); },
             gf_routes("sum H_n t^n", h_plain));

  {
    std::vector<double> grid = gf_grid();
    grid.insert(grid.begin(), -1.0);
    auto routes = gf_routes("sum H_n t^n / n", h_over_n);
    parametric("GF_H_N", kEulerGroup, "sum H_n t^n / n = ln^2(1-t)/2 + Li2(t)",
               "sum_{n>=1} H_n t^n/n = (1/2) ln^2(1-t) + Li2(t)", "t", std::move(grid), gf_domain,
               "ln^2(1-t)/2 + Li2(t)",
               [](double t) {
                 const PreciseValue l = log_one_minus(t);
                 return l * l * num(0.5) + li2(t);
               },
               std::move(routes));
  }

  auto euler_series_routes = [](const char* name, HarmonicCoefficient coeff, double tol) {
    std::vector<RoutePlan> routes;
    routes.push_back(custom_route(
        Route::SERIES_DIRECT, tol,
        [name, coeff, tol](std::optional<double> p) {
          return from_sum(sum_direct(harmonic_power_series(name, require(p), coeff), tol / 100.0));
        },
        std::string("partial sums of ") + name));
    routes.push_back(cvz_route(
        tol, [name, coeff](std::optional<double> p) { return harmonic_power_series(name, require(p), coeff); },
        std::string("CVZ on ") + name, is_negative));
    return routes;
  };

  const std::vector<double> eq56_grid{-0.75, -0.5, 0.5, 0.75};
  const auto eq56_domain = [](double t) { return t > -1.0 && t <= 0.9; };

  parametric("EQ5", kEulerGroup, "sum H_n^(2) t^n / n = Li3(t) - ln(1-t) Li2(t) - int_0^t ln^2(1-s)/s ds",
             "sum_{n>=1} H_n^(2) t^n/n = Li3(t) - ln(1-t) Li2(t) - int_0^t ln^2(1-s)/s ds", "t", eq56_grid, eq56_domain,
             "Li3(t) - ln(1-t) Li2(t) - int_0^t ln^2(1-s)/s ds (quadrature)",
             [](double t) {
               return li3(t) - log_one_minus(t) * li2(t) - log_square_integral_quad(t, kTolQuad / 10.0);
             },
             euler_series_routes("sum H_n^(2) t^n/n", h2_over_n, kTolQuad));

  parametric("EQ6", kEulerGroup, "2 sum H_n t^n / n^2 = int_0^t ln^2(1-s)/s ds + 2 Li3(t)",
             "2 sum_{n>=1} H_n t^n/n^2 = int_0^t ln^2(1-s)/s ds + 2 Li3(t)", "t", eq56_grid, eq56_domain,
             "int_0^t ln^2(1-s)/s ds (quadrature) + 2 Li3(t)",
             [](double t) { return log_square_integral_quad(t, kTolQuad / 10.0) + num(2.0) * li3(t); },
             euler_series_routes("2 sum H_n t^n/n^2", two_h_over_n2, kTolQuad));

  {
    auto routes = gf_routes("sum (H_n^(2)/n + 2 H_n/n^2) t^n", lemma_coefficient);
    // The boundary t = -1 is checked by acceleration only: partial sums cannot
    // reach the series tolerance there within the term budget.
    routes.front().covers = [](double t) { return t > -1.0; };
    routes.push_back(custom_route(
        Route::POLYLOG_EXPR, kTolSeries,
        [](std::optional<double> p) {
          const double t = require(p);
          if (!below_one(t)) throw UsageError("LEMMA4 POLYLOG_EXPR route needs 0 <= t < 1");
          const PreciseValue l3 = li3(t);
          const PreciseValue antiderivative = log_square_integral_closed(t);
          const PreciseValue eq5 = l3 - log_one_minus(t) * li2(t) - antiderivative;
          const PreciseValue eq6 = antiderivative + num(2.0) * l3;
          return RouteOutcome{eq5 + eq6, 6};
        },
        "sum of the polylogarithmic right-hand sides of the two component series", below_one));
    parametric("LEMMA4", kEulerGroup, "sum H_n^(2) t^n / n + 2 sum H_n t^n / n^2 = 3 Li3(t) - Li2(t) ln(1-t)",
               "sum H_n^(2) t^n/n + 2 sum H_n t^n/n^2 = 3 Li3(t) - Li2(t) ln(1-t), |t| <= 1, t != 1", "t",
               {-1.0, -0.75, -0.5, -0.25, 0.25, 0.5, 0.75}, gf_domain, "3 Li3(t) - Li2(t) ln(1-t)",
               [](double t) { return num(3.0) * li3(t) - li2(t) * log_one_minus(t); }, std::move(routes));
  }

  scalar("RAO", kEulerGroup, "sum (-1)^(n-1) H_n / n^2 = 5/8 zeta(3)", "sum_{n>=1} H_n (-1)^(n-1)/n^2 = (5/8) zeta(3)",
         M({5, 8}, 0, 0, 1),
         {cvz_route(kTolSeries, [](auto) { return harmonic_alternating("sum (-1)^(n-1) H_n/n^2", 1, h_over_n2); },
                    "CVZ on H_n/n^2"),
          direct_route(kTolCoarse, [](auto) { return harmonic_alternating("sum (-1)^(n-1) H_n/n^2", 1, h_over_n2); },
                       "partial sums of sum (-1)^(n-1) H_n/n^2")});

  scalar("ALT_H2_N", kEulerGroup, "sum (-1)^(n-1) H_n^(2) / n = zeta(3) - pi^2/12 ln 2",
         "sum_{n>=1} H_n^(2) (-1)^(n-1)/n = zeta(3) - pi^2/12 log 2", M({1}, 0, 0, 1) - M({1, 12}, 2, 1),
         {cvz_route(kTolSeries, [](auto) { return harmonic_alternating("sum (-1)^(n-1) H_n^(2)/n", 1, h2_over_n); },
                    "CVZ on H_n^(2)/n"),
          direct_route(kTolCoarse, [](auto) { return harmonic_alternating("sum (-1)^(n-1) H_n^(2)/n", 1, h2_over_n); },
                       "partial sums of sum (-1)^(n-1) H_n^(2)/n")});

  scalar("J2_SERIES", kEulerGroup, "sum (-1)^(n+1) H_n^(2) / (n+1) = pi^2/12 ln 2 - zeta(3)/4",
         "sum_{n>=1} (-1)^(n+1)/(n+1) H_n^(2) = pi^2/12 ln 2 - zeta(3)/4", M({1, 12}, 2, 1) - M({1, 4}, 0, 0, 1),
         {cvz_route(kTolSeries,
                    [](auto) { return harmonic_alternating("sum (-1)^(n+1) H_n^(2)/(n+1)", 1, h2_over_n_plus_1); },
                    "CVZ on H_n^(2)/(n+1)"),
          direct_route(kTolCoarse,
                       [](auto) { return harmonic_alternating("sum (-1)^(n+1) H_n^(2)/(n+1)", 1, h2_over_n_plus_1); },
                       "partial sums of sum (-1)^(n+1) H_n^(2)/(n+1)")});

  return out;
}

//----------------------------------------------------------------------

PreciseValue rhs_value(const Identity& e, std::optional<double> param) {
  if (e.rhs_closed_form) return eval_closed_form(*e.rhs_closed_form);
  return e.rhs_parametric(require(param));
}

bool route_covers(const RoutePlan& plan, double param) { return !plan.covers || plan.covers(param); }

VerificationResult run_route(const Identity& e, const RoutePlan& plan, std::optional<double> param,
                             std::optional<double> tol_override) {
  VerificationResult r;
  r.id = e.id;
  r.route = plan.route;
  r.param = param;
  r.anchor = e.anchor;
  r.tolerance = tol_override.value_or(plan.tolerance_at(param));

  const auto start = std::chrono::steady_clock::now();
  try {
    const RouteOutcome lhs = plan.evaluate(param);
    const PreciseValue rhs = rhs_value(e, param);
    r.lhs = lhs.value;
    r.rhs = rhs;
    r.evals = lhs.evals;
    r.residual = std::fabs(lhs.value.value() - rhs.value());
    // A tolerance finer than the combined error bounds cannot be certified.
    const double resolution = lhs.value.abs_error() + rhs.abs_error();
    r.pass = r.residual <= r.tolerance && resolution <= r.tolerance;
    if (!r.pass) {
      r.diagnostic = r.residual > r.tolerance ? "residual exceeds tolerance"
                                              : "tolerance below the combined error bound of the two sides";
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.residual = HUGE_VAL;
    r.diagnostic = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void sort_results(std::vector<VerificationResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const VerificationResult& a, const VerificationResult& b) {
    return std::make_tuple(std::string_view(a.id), route_name(a.route), a.param.value_or(-HUGE_VAL)) <
           std::make_tuple(std::string_view(b.id), route_name(b.route), b.param.value_or(-HUGE_VAL));
  });
}

void sweep_identity(const Identity& e, std::optional<double> tol_override, std::vector<VerificationResult>& out) {
  for (const RoutePlan& plan : e.routes) {
    if (!e.parametric()) {
      out.push_back(run_route(e, plan, std::nullopt, tol_override));
      continue;
    }
    for (double p : e.param_grid) {
      if (route_covers(plan, p)) out.push_back(run_route(e, plan, p, tol_override));
    }
  }
}

} // namespace

std::string_view route_name(Route r) noexcept { return kRouteNames[static_cast<std::size_t>(r)]; }

Route parse_route(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (std::size_t i = 0; i < kRouteNames.size(); ++i) {
    if (upper == kRouteNames[i]) return static_cast<Route>(i);
  }
  throw UsageError("unknown route '" + std::string(name) + "'");
}

const RoutePlan* Identity::find_route(Route r) const noexcept {
  for (const auto& p : routes) {
    if (p.route == r) return &p;
  }
  return nullptr;
}

double Identity::tolerance() const noexcept {
  double t = HUGE_VAL;
  for (const auto& p : routes) t = std::min(t, p.tolerance);
  return t;
}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> entries = build_registry();
  return entries;
}

const Identity& find_identity(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.id == id) return e;
  }
  throw UsageError("unknown identity '" + std::string(id) + "'");
}

VerificationResult evaluate(std::string_view id, Route route, std::optional<double> param,
                            std::optional<double> tol_override) {
  const Identity& e = find_identity(id);
  const RoutePlan* plan = e.find_route(route);
  if (!plan) throw UsageError("identity " + e.id + " has no route " + std::string(route_name(route)));
  if (e.parametric()) {
    if (!param) throw UsageError("identity " + e.id + " needs a value for parameter " + e.param_name);
    if (e.param_domain && !e.param_domain(*param)) {
      throw UsageError("parameter " + e.param_name + "=" + std::to_string(*param) + " outside the domain of " + e.id);
    }
    if (!route_covers(*plan, *param)) {
      throw UsageError("route " + std::string(route_name(route)) + " of " + e.id + " does not cover " + e.param_name +
                       "=" + std::to_string(*param));
    }
  } else if (param) {
    throw UsageError("identity " + e.id + " takes no parameter");
  }
  if (tol_override && !(*tol_override > 0.0)) throw UsageError("tolerance override must be positive");
  return run_route(e, *plan, param, tol_override);
}

std::vector<VerificationResult> verify_all(std::optional<double> tol_override) {
  if (tol_override && !(*tol_override > 0.0)) throw UsageError("tolerance override must be positive");
  std::vector<VerificationResult> out;
  for (const auto& e : registry()) sweep_identity(e, tol_override, out);
  sort_results(out);
  return out;
}

std::vector<VerificationResult> verify_identity(std::string_view id, std::optional<double> tol_override) {
  if (tol_override && !(*tol_override > 0.0)) throw UsageError("tolerance override must be positive");
  std::vector<VerificationResult> out;
  sweep_identity(find_identity(id), tol_override, out);
  sort_results(out);
  return out;
}

PreciseValue log_square_integral_closed(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("log_square_integral_closed: need 0 <= t < 1");
  if (t == 0.0) return PreciseValue::exact(0.0);
  const double u = 1.0 - t;
  const PreciseValue lt{std::log(t), ulp(std::log(t))};
  const PreciseValue lu = log_one_minus(t);
  return (lt * lu * lu + num(2.0) * lu * li2(u) - num(2.0) * li3(u) + num(2.0) * K(Constant::ZETA3)).widened(ulp(u));
}

PreciseValue log_square_integral_quad(double t, double tol, std::int64_t* evals) {
  if (!(t >= -1.0 && t < 1.0)) throw DomainError("log_square_integral_quad: need -1 <= t < 1");
  if (t == 0.0) return PreciseValue::exact(0.0);
  const QuadResult q = t > 0.0 ? integrate_1d(log_square_over, 0.0, t, tol) : integrate_1d(log_square_over, t, 0.0, tol);
  if (evals) *evals += q.evals;
  return t > 0.0 ? q.value : -q.value;
}

} // namespace altsum
