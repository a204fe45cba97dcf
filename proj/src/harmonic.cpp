// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/harmonic.hpp"

#include <cmath>

namespace altsum {

const HarmonicTriple& HarmonicStream::next() {
  const std::int64_t n = current_.n + 1;
  const double inv = 1.0 / static_cast<double>(n);
  const double nd = static_cast<double>(n);
  const double inv2 = 1.0 / (nd * nd);
  h_.add(inv);
  h_minus_.add((n % 2 == 1) ? inv : -inv);
  h2_.add(inv2);
  current_ = {n, h_.value(), h_minus_.value(), h2_.value()};
  return current_;
}

const HarmonicTriple& HarmonicStream::at(std::int64_t n) {
  if (n < 0) throw UsageError("harmonic index must be non-negative");
  if (n < current_.n) *this = HarmonicStream{};
  while (current_.n < n) next();
  return current_;
}

std::vector<HarmonicTriple> harmonic_stream(std::int64_t n_max) {
  std::vector<HarmonicTriple> out;
  if (n_max <= 0) return out;
  out.reserve(static_cast<std::size_t>(n_max));
  HarmonicStream s;
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(s.next());
  return out;
}

namespace {

// (-1)^n (ln 2 - H_n^-), evaluated as a double-double difference so the
// result keeps relative accuracy as it shrinks like 1/(2n).
PreciseValue skew_gap(const HarmonicStream& s) {
  const double ln2_hi = constant(Constant::LN2).value();
  const double ln2_lo = constant_lo(Constant::LN2);
  const double gap = (ln2_hi - s.h_minus_head()) + (ln2_lo - s.h_minus_tail());
  const double v = (s.current().n % 2 == 0) ? gap : -gap;
  // Accumulation error of H_n^- is O(eps^2 n), plus ln 2 representation and
  // the final roundings.
  const double n = static_cast<double>(s.current().n);
  const double err = 4.0 * kEps * kEps * (n + 1.0) + 2.0 * ulp(v) + 1e-19;
  return {v, err};
}

} // namespace

PreciseValue inner_sum(std::int64_t n) {
  if (n < 0) throw UsageError("inner_sum: n must be non-negative");
  HarmonicStream s;
  s.at(n);
  return skew_gap(s);
}

PreciseValue InnerSumCursor::at(std::int64_t n) {
  if (n < 0) throw UsageError("inner_sum: n must be non-negative");
  stream_.at(n);
  return skew_gap(stream_);
}

} // namespace altsum
