// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include "altsum/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "altsum/identities.hpp"
#include "altsum/polylog.hpp"
#include "altsum/realcore.hpp"
#include "altsum/report.hpp"

namespace altsum::cli {

namespace {

std::string format_error(double e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", e);
  return buf;
}

std::string show(const PreciseValue& v) { return format_double(v.value()) + " ± " + format_error(v.abs_error()); }

void print_result(const VerificationResult& r, std::ostream& out) {
  out << r.id << " " << route_name(r.route);
  if (r.param) out << " param=" << format_double(*r.param);
  if (r.lhs) out << " lhs=" << show(*r.lhs);
  if (r.rhs) out << " rhs=" << show(*r.rhs);
  out << " residual=" << format_error(r.residual) << " tol=" << format_error(r.tolerance) << " "
      << (r.pass ? "PASS" : "FAIL");
  if (!r.diagnostic.empty()) out << " (" << r.diagnostic << ")";
  out << "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

struct VerifyOptions {
  std::string id;
  std::optional<double> tol;
  std::string json_path;
  std::string md_path;
  bool no_timestamp = false;
};

int do_list(std::ostream& out) {
  for (const auto& e : registry()) {
    out << e.id << "\n  " << e.description << "\n  statement: " << e.anchor << "\n  routes:";
    for (const auto& p : e.routes) out << " " << route_name(p.route);
    if (e.parametric()) {
      out << "\n  " << e.param_name << " grid:";
      for (double p : e.param_grid) out << " " << format_double(p);
    }
    out << "\n";
  }
  return kExitPass;
}

int do_verify(const VerifyOptions& o, std::ostream& out) {
  const auto results = o.id.empty() ? verify_all(o.tol) : verify_identity(o.id, o.tol);
  const Report report = make_report(results, {.reproducible = o.no_timestamp});
  if (!o.json_path.empty()) write_file(o.json_path, to_json(report));
  if (!o.md_path.empty()) write_file(o.md_path, to_markdown(report));

  std::size_t identities = 0;
  std::string last;
  for (const auto& r : results) {
    if (r.id != last) ++identities;
    last = r.id;
    if (!r.pass) print_result(r, out);
  }
  out << identities << " identities, " << report.summary.total << " checks, " << report.summary.passed << " passed, "
      << report.summary.failed << " failed, max residual " << format_error(report.summary.max_residual) << "\n";
  return report.summary.failed == 0 ? kExitPass : kExitFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of alternating-series, polylogarithm and Euler-sum identities", "altsum"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List identity IDs with descriptions and statements");

  VerifyOptions vo;
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Run the verification sweep");
  verify->add_option("--id", vo.id, "Verify a single identity");
  auto* tol_opt = verify->add_option("--tol", tol, "Override every tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--json", vo.json_path, "Write a JSON report");
  verify->add_option("--md", vo.md_path, "Write a Markdown report");
  verify->add_flag("--no-timestamp", vo.no_timestamp, "Reproducible report: no timestamp, zero timings");

  auto* eval = app.add_subcommand("eval", "Evaluate a function, constant or identity");
  eval->require_subcommand(1);
  double t_arg = 0.0;
  auto* eval_li2 = eval->add_subcommand("li2", "Dilogarithm on [-1, 1]");
  eval_li2->add_option("t", t_arg, "Argument")->required();
  auto* eval_li3 = eval->add_subcommand("li3", "Trilogarithm on [-1, 1]");
  eval_li3->add_option("t", t_arg, "Argument")->required();
  std::string const_name;
  auto* eval_const = eval->add_subcommand("const", "pi, ln2, zeta3 or catalan");
  eval_const->add_option("name", const_name, "Constant name")->required();
  std::string identity_id;
  std::string route_text;
  double param = 0.0;
  auto* eval_identity = eval->add_subcommand("identity", "Evaluate one identity on one route");
  eval_identity->add_option("id", identity_id, "Identity ID")->required();
  eval_identity->add_option("--route", route_text, "Evaluation route")->required();
  auto* param_opt = eval_identity->add_option("--param", param, "Parameter value for parametric identities");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*list) return do_list(out);
    if (*verify) {
      if (*tol_opt) vo.tol = tol;
      return do_verify(vo, out);
    }
    if (*eval_li2) {
      out << show(li2(t_arg)) << "\n";
      return kExitPass;
    }
    if (*eval_li3) {
      out << show(li3(t_arg)) << "\n";
      return kExitPass;
    }
    if (*eval_const) {
      const Constant c = parse_constant(const_name);
      out << constant_name(c) << " = " << show(constant(c)) << "\n";
      return kExitPass;
    }
    if (*eval_identity) {
      const std::optional<double> p = *param_opt ? std::optional<double>(param) : std::nullopt;
      const VerificationResult r = evaluate(identity_id, parse_route(route_text), p);
      print_result(r, out);
      return r.pass ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace altsum::cli
