// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "altsum/accel.hpp"

namespace altsum {

PolylogArg::PolylogArg(double t) : t_(t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("polylog argument " + std::to_string(t) + " outside [-1, 1]");
}

namespace detail {

PreciseValue polylog_series(double t, int order) {
  if (std::fabs(t) > 0.5) throw DomainError("polylog_series: |t| > 1/2");
  if (t == 0.0) return PreciseValue::exact(0.0);
  CompensatedSum acc;
  double power = 1.0;
  for (int n = 1;; ++n) {
    power *= t;
    const double nd = static_cast<double>(n);
    const double term = power / std::pow(nd, order);
    acc.add(term);
    const double next = std::fabs(power * t) / std::pow(nd + 1.0, order);
    if (next < 1e-18 * std::max(1.0, std::fabs(acc.value()))) {
      // Geometric tail, ratio <= |t| <= 1/2.
      return {acc.value(), 2.0 * next + acc.error_bound() + 2.0 * nd * kEps * std::fabs(t) * kEps};
    }
  }
}

} // namespace detail

namespace {

PreciseValue zeta2() {
  const PreciseValue pi = constant(Constant::PI);
  return pi * pi / PreciseValue::exact(6.0);
}

PreciseValue log_of(double x) {
  const double v = std::log(x);
  return {v, ulp(v)};
}

// Li_3 on [-1, -1/2): alternating series sum (-1)^n |t|^n / n^3 accelerated.
PreciseValue li3_negative(double t) {
  const double r = -t;
  SeriesSpec spec;
  spec.name = "Li3 negative branch";
  spec.start = 1;
  spec.pattern = SignPattern::alternating;
  spec.leading_sign = -1.0;
  spec.magnitude = [r](std::int64_t n) {
    const double nd = static_cast<double>(n);
    return std::pow(r, nd) / (nd * nd * nd);
  };
  return sum_cvz(spec, 36).value;
}

} // namespace

PreciseValue li2(PolylogArg arg) {
  const double t = arg.value();
  if (t == 0.0) return PreciseValue::exact(0.0);
  if (t == 1.0) return zeta2();
  if (std::fabs(t) <= 0.5) return detail::polylog_series(t, 2);
  if (t > 0.5) {
    // Li2(t) + Li2(1-t) = pi^2/6 - ln t ln(1-t); 1-t is exact here.
    const double u = 1.0 - t;
    return zeta2() - log_of(t) * log_of(u) - detail::polylog_series(u, 2);
  }
  // t in [-1, -1/2): Li2(t) = Li2(t^2)/2 - Li2(-t).
  const PreciseValue half_sq = li2(PolylogArg{t * t}) * PreciseValue::exact(0.5);
  return half_sq.widened(ulp(t * t)) - li2(PolylogArg{-t});
}

PreciseValue li3(PolylogArg arg) {
  const double t = arg.value();
  if (t == 0.0) return PreciseValue::exact(0.0);
  if (t == 1.0) return constant(Constant::ZETA3);
  if (std::fabs(t) <= 0.5) return detail::polylog_series(t, 3);
  if (t < -0.5) return li3_negative(t);

  // t in (1/2, 1): Landen-type relation
  //   Li3(t) + Li3(1-t) + Li3(1-1/t)
  //     = zeta(3) + ln^3 t / 6 + (pi^2/6) ln t - ln^2 t ln(1-t) / 2
  const double u = 1.0 - t;
  const double w = 1.0 - 1.0 / t; // in (-1, 0)
  const PreciseValue lt = log_of(t);
  const PreciseValue lu = log_of(u);
  const PreciseValue lt2 = lt * lt;
  PreciseValue rhs = constant(Constant::ZETA3) + lt2 * lt / PreciseValue::exact(6.0) + zeta2() * lt -
                     lt2 * lu * PreciseValue::exact(0.5);
  return (rhs - detail::polylog_series(u, 3) - li3(PolylogArg{w})).widened(ulp(w));
}

} // namespace altsum
