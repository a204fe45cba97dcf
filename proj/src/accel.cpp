// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/accel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace altsum {

namespace {

double checked_magnitude(const SeriesSpec& s, std::int64_t k) {
  const double a = s.magnitude(k);
  if (!std::isfinite(a)) {
    throw ConvergenceError("series '" + s.name + "': non-finite term at k=" + std::to_string(k));
  }
  return std::fabs(a);
}

double positive_tail_bound(const SeriesSpec& s, double next_term, std::int64_t next_index) {
  switch (s.decay.kind) {
  case DecayClass::Kind::geometric:
    return next_term / (1.0 - s.decay.parameter);
  case DecayClass::Kind::power_law:
    // sum_{k>=m} C k^-p <= a_m (1 + m/(p-1))
    return next_term * (1.0 + static_cast<double>(next_index) / (s.decay.parameter - 1.0));
  case DecayClass::Kind::irregular:
    break;
  }
  return HUGE_VAL;
}

} // namespace

SumResult sum_direct(const SeriesSpec& s, double target_abs_err, std::int64_t term_budget) {
  if (!(target_abs_err > 0.0)) throw UsageError("sum_direct: target_abs_err must be positive");
  if (!s.magnitude) throw UsageError("sum_direct: series '" + s.name + "' has no term function");
  if (s.pattern == SignPattern::positive) {
    const bool ok_geo = s.decay.kind == DecayClass::Kind::geometric && s.decay.parameter > 0.0 && s.decay.parameter < 1.0;
    const bool ok_pow = s.decay.kind == DecayClass::Kind::power_law && s.decay.parameter > 1.0;
    if (!ok_geo && !ok_pow) {
      throw UsageError("sum_direct: positive series '" + s.name + "' needs a geometric or p>1 power-law decay class");
    }
  }

  CompensatedSum acc;
  std::int64_t k = s.start;
  double a = checked_magnitude(s, k);
  double sign = 1.0;
  for (;;) {
    acc.add(sign * a);
    const std::int64_t used = k - s.start + 1;
    const double next = checked_magnitude(s, k + 1);
    const double tail =
        s.pattern == SignPattern::alternating ? next : positive_tail_bound(s, next, k + 1);
    if (k + 1 > s.monotone_from && tail <= target_abs_err) {
      const PreciseValue total{s.leading_sign * acc.value(), tail + acc.error_bound()};
      return {total, used, SumResult::Method::direct};
    }
    if (used >= term_budget) {
      throw ConvergenceError("series '" + s.name + "' converges too slowly: term budget of " +
                             std::to_string(term_budget) + " exhausted at tail bound " + std::to_string(tail));
    }
    ++k;
    a = next;
    if (s.pattern == SignPattern::alternating) sign = -sign;
  }
}

namespace {

// Algorithm 1 of Cohen, Rodriguez Villegas and Zagier applied to the first
// n magnitudes; also returns sum |weight_k a_k| / d for the rounding bound.
struct CvzPass {
  double value = 0.0;
  double abs_weighted = 0.0;
};

CvzPass cvz_pass(const std::vector<double>& a, int n) {
  const double base = std::pow(3.0 + std::sqrt(8.0), n);
  const double d = (base + 1.0 / base) / 2.0;
  double b = -1.0;
  double c = -d;
  CompensatedSum s;
  double abs_weighted = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s.add(c * a[static_cast<std::size_t>(k)]);
    abs_weighted += std::fabs(c * a[static_cast<std::size_t>(k)]);
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(n);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return {s.value() / d, abs_weighted / d};
}

} // namespace

SumResult sum_cvz(const SeriesSpec& s, int n_terms) {
  if (n_terms < 4) throw UsageError("sum_cvz: n_terms must be at least 4");
  if (s.pattern != SignPattern::alternating) throw UsageError("sum_cvz: series '" + s.name + "' is not alternating");
  if (!s.magnitude) throw UsageError("sum_cvz: series '" + s.name + "' has no term function");

  std::vector<double> a(static_cast<std::size_t>(n_terms));
  double scale = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    a[static_cast<std::size_t>(k)] = checked_magnitude(s, s.start + k);
    scale = std::max(scale, a[static_cast<std::size_t>(k)]);
  }

  const CvzPass full = cvz_pass(a, n_terms);
  const CvzPass coarse = cvz_pass(a, n_terms - 2);
  const double theoretical = 2.0 * scale / std::pow(3.0 + std::sqrt(8.0), n_terms);
  const double disagreement = std::fabs(full.value - coarse.value);
  const double rounding = 4.0 * kEps * (full.abs_weighted + std::fabs(full.value));
  const double err = std::max(theoretical, disagreement) + rounding;
  return {PreciseValue{s.leading_sign * full.value, err}, n_terms, SumResult::Method::cvz};
}

int cvz_default_terms(double digits) {
  return static_cast<int>(std::ceil(digits * std::log(10.0) / std::log(3.0 + std::sqrt(8.0)))) + 10;
}

} // namespace altsum
