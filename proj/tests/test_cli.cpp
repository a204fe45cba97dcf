// Copyright Contributors to the altsum project
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "altsum/cli.hpp"
#include "altsum/report.hpp"

namespace fs = std::filesystem;
using altsum::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "altsum");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path temp_dir() {
  const fs::path d = fs::temp_directory_path() / ("altsum_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

} // namespace

TEST(Cli, EvalDilogAtZero) {
  const Outcome o = call({"eval", "li2", "0"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "0 ± 0\n");
}

TEST(Cli, EvalFunctionsAndConstants) {
  Outcome o = call({"eval", "li3", "0.5"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.rfind("0.5372131936", 0), 0u) << o.out;
  o = call({"eval", "const", "catalan"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("CATALAN = 0.9159655941772190"), std::string::npos) << o.out;
  o = call({"eval", "li2", "2"});
  EXPECT_EQ(o.code, 2);
  o = call({"eval", "const", "e"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("Usage"), std::string::npos);
}

TEST(Cli, EvalIdentity) {
  Outcome o = call({"eval", "identity", "SIGMA", "--route", "QUAD_2D"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("PASS"), std::string::npos);
  o = call({"eval", "identity", "GF_H", "--route", "SERIES_DIRECT", "--param", "0.5"});
  EXPECT_EQ(o.code, 0) << o.err;
  o = call({"eval", "identity", "GF_H", "--route", "SERIES_DIRECT"});
  EXPECT_EQ(o.code, 2);
  o = call({"eval", "identity", "NOPE", "--route", "QUAD_2D"});
  EXPECT_EQ(o.code, 2);
  o = call({"eval", "identity", "SIGMA", "--route", "TELEPATHY"});
  EXPECT_EQ(o.code, 2);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"verify", "--bogus"}, {"verify", "--tol", "-1"}, {"eval"}, {"verify", "--id", "NOPE"}}) {
    const Outcome o = call(args);
    EXPECT_EQ(o.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(o.err.empty());
  }
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, List) {
  const Outcome o = call({"list"});
  EXPECT_EQ(o.code, 0);
  for (const char* id : {"SIGMA1", "EQ5", "LEMMA4", "INNER_REP", "REM2_SER"})
    EXPECT_NE(o.out.find(std::string(id) + "\n"), std::string::npos) << id;
}

TEST(Cli, VerifyExitCodes) {
  Outcome o = call({"verify", "--id", "SIGMA"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("1 identities, 2 checks, 2 passed, 0 failed"), std::string::npos) << o.out;
  o = call({"verify", "--id", "SIGMA", "--tol", "1e-30"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyWritesReports) {
  const fs::path dir = temp_dir();
  const fs::path json = dir / "r.json", md = dir / "r.md";
  const Outcome o = call({"verify", "--id", "LEMMA4", "--json", json.string(), "--md", md.string()});
  EXPECT_EQ(o.code, 0);
  const altsum::Report r = altsum::parse_json(slurp(json));
  EXPECT_GT(r.summary.total, 0);
  EXPECT_EQ(r.summary.failed, 0);
  EXPECT_TRUE(r.timestamp);
  EXPECT_NE(slurp(md).find("LEMMA4"), std::string::npos);
  EXPECT_EQ(call({"verify", "--id", "RAO", "--json", (dir / "missing" / "x.json").string()}).code, 2);
  fs::remove_all(dir);
}

TEST(Cli, NoTimestampRunsAreByteIdentical) {
  const fs::path dir = temp_dir();
  const fs::path a = dir / "a.json", b = dir / "b.json";
  ASSERT_EQ(call({"verify", "--id", "GF_H_N", "--no-timestamp", "--json", a.string()}).code, 0);
  ASSERT_EQ(call({"verify", "--id", "GF_H_N", "--no-timestamp", "--json", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a).find("timestamp"), std::string::npos);
  fs::remove_all(dir);
}
