// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "altsum/realcore.hpp"

namespace altsum {

/// Argument of a real polylogarithm, checked to lie in [-1, 1].
class PolylogArg {
public:
  /// Throws DomainError if |t| > 1 or t is NaN.
  explicit PolylogArg(double t);
  double value() const noexcept { return t_; }

private:
  double t_;
};

/// Dilogarithm Li_2(t) = sum t^n/n^2 on [-1, 1], abs_error <= 1e-13.
PreciseValue li2(PolylogArg t);
/// Trilogarithm Li_3(t) = sum t^n/n^3 on [-1, 1], abs_error <= 1e-13.
PreciseValue li3(PolylogArg t);

inline PreciseValue li2(double t) { return li2(PolylogArg{t}); }
inline PreciseValue li3(double t) { return li3(PolylogArg{t}); }

namespace detail {
/// sum_{n>=1} t^n/n^order for |t| <= 1/2.
PreciseValue polylog_series(double t, int order);
} // namespace detail

} // namespace altsum
