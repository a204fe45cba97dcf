// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "altsum/accel.hpp"

namespace altsum {

namespace {

using nlohmann::json;

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

std::string number_or_null(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return "null";
  return format_double(*x);
}

std::optional<double> optional_number(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

} // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Report make_report(const std::vector<VerificationResult>& results, ReportOptions options) {
  Report r;
  if (!options.reproducible) r.timestamp = utc_timestamp();
  for (const auto& v : results) {
    ReportRow row;
    row.id = v.id;
    row.route = std::string(route_name(v.route));
    row.param = v.param;
    if (v.lhs) row.lhs = v.lhs->value();
    if (v.rhs) row.rhs = v.rhs->value();
    row.residual = v.residual;
    row.tolerance = v.tolerance;
    row.pass = v.pass;
    row.paper_anchor = v.anchor;
    row.evals = v.evals;
    row.seconds = options.reproducible ? 0.0 : v.seconds;
    r.summary.total += 1;
    (v.pass ? r.summary.passed : r.summary.failed) += 1;
    r.summary.max_residual = std::max(r.summary.max_residual, v.residual);
    r.results.push_back(std::move(row));
  }
  return r;
}

std::string to_json(const Report& report) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"tool_version\": " << quote(report.tool_version) << ",\n";
  if (report.timestamp) out << "  \"timestamp\": " << quote(*report.timestamp) << ",\n";
  out << "  \"summary\": {\"total\": " << report.summary.total << ", \"passed\": " << report.summary.passed
      << ", \"failed\": " << report.summary.failed
      << ", \"max_residual\": " << number_or_null(report.summary.max_residual) << "},\n";
  out << "  \"results\": [";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const ReportRow& r = report.results[i];
    out << (i ? ",\n" : "\n");
    out << "    {\"id\": " << quote(r.id) << ", \"route\": " << quote(r.route)
        << ", \"param\": " << number_or_null(r.param) << ", \"lhs\": " << number_or_null(r.lhs)
        << ", \"rhs\": " << number_or_null(r.rhs) << ", \"residual\": " << number_or_null(r.residual)
        << ", \"tolerance\": " << format_double(r.tolerance) << ", \"pass\": " << (r.pass ? "true" : "false")
        << ", \"paper_anchor\": " << quote(r.paper_anchor) << ", \"evals\": " << r.evals
        << ", \"seconds\": " << format_double(r.seconds) << "}";
  }
  out << (report.results.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Report parse_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    if (j.contains("timestamp") && !j.at("timestamp").is_null()) r.timestamp = j.at("timestamp").get<std::string>();
    const json& s = j.at("summary");
    r.summary.total = s.at("total").get<std::int64_t>();
    r.summary.passed = s.at("passed").get<std::int64_t>();
    r.summary.failed = s.at("failed").get<std::int64_t>();
    r.summary.max_residual = optional_number(s, "max_residual").value_or(HUGE_VAL);
    for (const json& e : j.at("results")) {
      ReportRow row;
      row.id = e.at("id").get<std::string>();
      row.route = e.at("route").get<std::string>();
      row.param = optional_number(e, "param");
      row.lhs = optional_number(e, "lhs");
      row.rhs = optional_number(e, "rhs");
      row.residual = optional_number(e, "residual").value_or(HUGE_VAL);
      row.tolerance = e.at("tolerance").get<double>();
      row.pass = e.at("pass").get<bool>();
      row.paper_anchor = e.at("paper_anchor").get<std::string>();
      row.evals = e.at("evals").get<std::int64_t>();
      row.seconds = e.at("seconds").get<double>();
      r.results.push_back(std::move(row));
    }
    return r;
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed report JSON: ") + ex.what());
  }
}

namespace {

std::string short_number(std::optional<double> x) {
  if (!x) return "-";
  if (!std::isfinite(*x)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", *x);
  return buf;
}

std::string escape_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

// Alternating harmonic series with 40 terms, direct vs accelerated.
std::string acceleration_contrast() {
  SeriesSpec s;
  s.name = "sum (-1)^(k-1)/k";
  s.magnitude = [](std::int64_t k) { return 1.0 / static_cast<double>(k); };
  const double ln2 = constant(Constant::LN2).value();
  const double cvz = sum_cvz(s, 40).value.value();
  CompensatedSum direct;
  for (int k = 1; k <= 40; ++k) direct.add((k % 2 ? 1.0 : -1.0) / k);
  std::ostringstream out;
  out << "| method | terms | value | error vs ln 2 |\n|---|---|---|---|\n";
  out << "| direct partial sum | 40 | " << format_double(direct.value()) << " | "
      << short_number(std::fabs(direct.value() - ln2)) << " |\n";
  out << "| CVZ acceleration | 40 | " << format_double(cvz) << " | " << short_number(std::fabs(cvz - ln2)) << " |\n";
  return out.str();
}

} // namespace

std::string to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# Identity verification report\n\n";
  out << "tool version " << report.tool_version;
  if (report.timestamp) out << ", generated " << *report.timestamp;
  out << "\n\n";
  out << "**" << report.summary.total << " checks, " << report.summary.passed << " passed, " << report.summary.failed
      << " failed**, max residual " << short_number(report.summary.max_residual) << "\n\n";

  // Group rows by the registry section of their identity, in registry order.
  std::vector<std::string> sections;
  std::map<std::string, std::string> section_of;
  for (const auto& e : registry()) {
    if (std::find(sections.begin(), sections.end(), e.section) == sections.end()) sections.push_back(e.section);
    section_of[e.id] = e.section;
  }
  for (const auto& section : sections) {
    bool header = false;
    for (const auto& r : report.results) {
      const auto it = section_of.find(r.id);
      if (it == section_of.end() || it->second != section) continue;
      if (!header) {
        out << "## " << section << "\n\n";
        out << "| id | route | param | lhs | rhs | residual | tolerance | status | statement |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        header = true;
      }
      out << "| " << r.id << " | " << r.route << " | " << (r.param ? format_double(*r.param) : std::string("-"))
          << " | " << number_or_null(r.lhs) << " | " << number_or_null(r.rhs) << " | " << short_number(r.residual)
          << " | " << short_number(r.tolerance) << " | " << (r.pass ? "PASS" : "**FAIL**") << " | \""
          << escape_cell(r.paper_anchor) << "\" |\n";
    }
    if (header) out << "\n";
  }

  out << "## Acceleration check\n\n" << acceleration_contrast() << "\n";
  return out.str();
}

} // namespace altsum
