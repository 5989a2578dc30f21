#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ezd/cli/cli.hpp"

using namespace ezd;
using cli::Json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run ezd_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(EZD_SOURCE_DIR) + "/tests/golden/" + name); }

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ezd_cli_test_" + name)).string();
}

std::string write_script(const std::string& name, const std::string& text) {
  const std::string p = scratch(name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

// The exit code a report implies.
int implied_exit(const Json& j) {
  bool budget = false;
  for (const auto& r : j["results"]) {
    if (r["status"] == "Fail") return cli::kAnyFail;
    budget = budget || r.value("budget_exceeded", false);
  }
  return budget ? cli::kBudget : cli::kAllPass;
}

}  // namespace

TEST_CASE("one-shot commands match their golden output") {
  auto e = ezd_run({"ext", "--ring", "GF(101)[x]/(x^2)", "--from", "k", "--to", "k", "--bound", "10"});
  CHECK(e.code == 0);
  CHECK(e.out == golden("ext_k_k.txt"));
  auto r = ezd_run({"resolve", "--ring", "GF(101)[x]/(x^4)", "--module", "modx(R, x)", "--bound", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("resolve_quartic.txt"));
  auto t = ezd_run({"tor", "--ring", "GF(101)[x]/(x^2)", "--from", "k", "--to", "R", "--bound", "4"});
  CHECK(t.code == 0);
  CHECK(t.out.find("Tor(k,R) degrees 0..4: 1 0 0 0 0") == 0);
}

TEST_CASE("search report is fixed for seed 7") {
  auto a = ezd_run({"search", "--seed", "7", "--trials", "500", "--dims", "6"});
  CHECK(a.code == 0);
  CHECK(a.out == golden("search_seed7.txt"));
  auto empty = ezd_run({"search", "--trials", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("gated instances     0") != std::string::npos);
}

TEST_CASE("check writes a JSON report that round-trips") {
  const std::string js = scratch("report.json");
  auto r = ezd_run({"check", std::string(EZD_CORPUS_DIR) + "/dualizing_module.ezd", "--json", js, "--quiet"});
  CHECK(r.code == 0);
  const std::string text = slurp(js);
  Json j = Json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
  CHECK(j["version"] == cli::kVersion);
  CHECK(j["bound"] == 10);
  CHECK(j["seed"] == 1);
  CHECK(implied_exit(j) == r.code);
  bool certificate = false;
  for (const auto& res : j["results"]) {
    CHECK(res.contains("id"));
    CHECK(res.contains("status"));
    CHECK(res.contains("millis"));
    if (res["witness"] == "CertifiedAll" && res.contains("tables")) certificate = true;
  }
  CHECK(certificate);
}

TEST_CASE("exit codes follow the report") {
  const std::string base = "ring A = GF(101)[x] / (x^2);\n";
  auto pass = ezd_run({"check", write_script("pass.ezd", base + "check dim(A, 2);\n"), "--json", scratch("p.json")});
  CHECK(pass.code == cli::kAllPass);
  CHECK(implied_exit(Json::parse(slurp(scratch("p.json")))) == pass.code);

  auto fail = ezd_run({"check", write_script("fail.ezd", base + "check dim(A, 3);\ncheck dim(A, 2);\n"), "--json",
                       scratch("f.json")});
  CHECK(fail.code == cli::kAnyFail);
  CHECK(implied_exit(Json::parse(slurp(scratch("f.json")))) == fail.code);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  CHECK(ezd_run({"check", write_script("bad.ezd", base + "check dim(A 2);\n")}).code == cli::kUsage);
  CHECK(ezd_run({"check", write_script("undef.ezd", base + "check dim(B, 2);\n")}).code == cli::kUsage);
  CHECK(ezd_run({"frobnicate"}).code == cli::kUsage);
  CHECK(ezd_run({"ext", "--from", "k"}).code == cli::kUsage);
  CHECK(ezd_run({"--field", "GF(4)", "search"}).code == cli::kUsage);
  CHECK(ezd_run({"check", scratch("does_not_exist.ezd")}).code == cli::kUsage);

  cli::Report rep;
  rep.results.push_back({"a", propcheck::Status::Pass, "", {}, false, 0});
  rep.results.push_back({"b", propcheck::Status::Inconclusive, "budget", {}, true, 0});
  CHECK(rep.exit_code() == cli::kBudget);
  CHECK(implied_exit(rep.to_json()) == cli::kBudget);
  rep.results.push_back({"c", propcheck::Status::Fail, "w", {}, false, 0});
  CHECK(rep.exit_code() == cli::kAnyFail);
}

TEST_CASE("verify-paper filters by statement") {
  auto a = ezd_run({"verify-paper", "--prop", "A", "--bound", "10", "--corpus", EZD_CORPUS_DIR});
  CHECK(a.code == 0);
  CHECK(a.out.find("prop_A") != std::string::npos);
  CHECK(a.out.find("prop_C") == std::string::npos);
  CHECK(ezd_run({"verify-paper", "--prop", "nothing", "--corpus", EZD_CORPUS_DIR}).code == cli::kUsage);
}
