// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "altsum/realcore.hpp"

namespace altsum {

/// Harmonic numbers at index n:
///   h       = H_n     = sum_{k<=n} 1/k
///   h_minus = H_n^-   = sum_{k<=n} (-1)^(k-1)/k   (skew-harmonic)
///   h2      = H_n^(2) = sum_{k<=n} 1/k^2
struct HarmonicTriple {
  std::int64_t n = 0;
  double h = 0.0;
  double h_minus = 0.0;
  double h2 = 0.0;

  friend bool operator==(const HarmonicTriple&, const HarmonicTriple&) = default;
};

// Single-cursor generator of HarmonicTriple for n = 1, 2, ... using the
// forward recurrences with compensated accumulation. O(1) per step.
class HarmonicStream {
public:
  HarmonicStream() = default;

  /// Advances to n + 1 and returns the new triple.
  const HarmonicTriple& next();
  /// Triple at the current index (n = 0 before the first call to next()).
  const HarmonicTriple& current() const noexcept { return current_; }

  /// Returns the triple at index n >= 0. Forward moves are incremental;
  /// a backward request restarts the stream from zero.
  const HarmonicTriple& at(std::int64_t n);

  /// The skew-harmonic sum as an unevaluated (head, tail) pair.
  double h_minus_head() const noexcept { return h_minus_.head(); }
  double h_minus_tail() const noexcept { return h_minus_.tail(); }

private:
  HarmonicTriple current_{};
  CompensatedSum h_;
  CompensatedSum h_minus_;
  CompensatedSum h2_;
};

/// Triples for n = 1..n_max; empty when n_max == 0.
std::vector<HarmonicTriple> harmonic_stream(std::int64_t n_max);

/// I_n = integral_0^1 x^n/(1+x) dx = sum_{k>=1} (-1)^(k-1)/(n+k)
///     = (-1)^n (ln 2 - H_n^-), with H_0^- = 0.
PreciseValue inner_sum(std::int64_t n);

/// Streaming I_n for n = 0, 1, 2, ...; same values as inner_sum() at O(1)
/// cost per step when accessed in increasing order.
class InnerSumCursor {
public:
  PreciseValue at(std::int64_t n);

private:
  HarmonicStream stream_;
};

} // namespace altsum
