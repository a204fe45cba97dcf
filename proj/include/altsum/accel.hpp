// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "altsum/realcore.hpp"

namespace altsum {

/// How |a_k| decays; drives the tail bound of positive-term series.
struct DecayClass {
  enum class Kind : std::uint8_t { geometric, power_law, irregular };

  Kind kind = Kind::irregular;
  /// geometric: bound rho < 1 on a_{k+1}/a_k past monotone_from.
  /// power_law: exponent p > 1 with a_k ~ C k^-p.
  double parameter = 0.0;

  static DecayClass geometric(double ratio_bound) { return {Kind::geometric, ratio_bound}; }
  static DecayClass power_law(double p) { return {Kind::power_law, p}; }
  static DecayClass irregular() { return {Kind::irregular, 0.0}; }
};

/// Sign pattern applied to the magnitudes.
enum class SignPattern : std::uint8_t {
  alternating, ///< sum_k (-1)^(k-start) |a_k|
  positive,    ///< sum_k |a_k|
};

// An infinite series given by its term magnitudes |a_k|, k >= start.
//
// The represented value is leading_sign * sum_k s_k |a_k| with s_k fixed
// by the sign pattern. The magnitude callback may carry a cursor; the
// summation routines call it with strictly increasing k.
struct SeriesSpec {
  std::string name;
  std::function<double(std::int64_t)> magnitude;
  std::int64_t start = 1;
  SignPattern pattern = SignPattern::alternating;
  DecayClass decay = DecayClass::power_law(1.0);
  /// |a_k| is non-increasing for k >= monotone_from (declared by the caller).
  std::int64_t monotone_from = 1;
  double leading_sign = 1.0;
};

struct SumResult {
  enum class Method : std::uint8_t { direct, cvz };

  PreciseValue value;
  std::int64_t terms_used = 0;
  Method method = Method::direct;
};

inline constexpr std::int64_t kDefaultTermBudget = 100'000'000;

/// Explicit partial sums, stopped once the tail bound drops to
/// target_abs_err. Alternating series use |a_{N+1}|; positive series use
/// the geometric or power-law tail of the declared decay class.
SumResult sum_direct(const SeriesSpec& s, double target_abs_err, std::int64_t term_budget = kDefaultTermBudget);

/// Cohen-Rodriguez Villegas-Zagier acceleration of an alternating series
/// using n_terms magnitudes. Requires n_terms >= 4.
SumResult sum_cvz(const SeriesSpec& s, int n_terms);

/// ceil(digits ln 10 / ln(3 + sqrt 8)) + 10.
int cvz_default_terms(double digits);

} // namespace altsum
