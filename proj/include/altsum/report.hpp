// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altsum/identities.hpp"

namespace altsum {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Flat projection of a VerificationResult as it appears in reports.
struct ReportRow {
  std::string id;
  std::string route;
  std::optional<double> param;
  std::optional<double> lhs;
  std::optional<double> rhs;
  double residual = 0.0; ///< +inf when the route failed
  double tolerance = 0.0;
  bool pass = false;
  std::string paper_anchor;
  std::int64_t evals = 0;
  double seconds = 0.0;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  double max_residual = 0.0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string tool_version{kToolVersion};
  std::optional<std::string> timestamp;
  ReportSummary summary;
  std::vector<ReportRow> results;

  friend bool operator==(const Report&, const Report&) = default;
};

struct ReportOptions {
  /// Omit the timestamp and zero the per-result wall-clock seconds so that
  /// repeated runs are byte-identical.
  bool reproducible = false;
};

Report make_report(const std::vector<VerificationResult>& results, ReportOptions options = {});

/// Fixed key order; numbers with 17 significant digits; non-finite values
/// and absent optionals as null.
std::string to_json(const Report& report);
/// Inverse of to_json. Throws UsageError on malformed input.
Report parse_json(std::string_view text);

/// Human-readable report grouped by registry section.
std::string to_markdown(const Report& report);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// "%.17g", the binary64 round-trip format used across reports.
std::string format_double(double x);

} // namespace altsum
