#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ezd/propcheck/checks.hpp"

namespace ezd::cli {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode { kAllPass = 0, kAnyFail = 1, kUsage = 2, kBudget = 3 };

using Json = nlohmann::ordered_json;

/// One entry of a report.
struct Result {
  std::string id;
  propcheck::Status status = propcheck::Status::Inconclusive;
  std::string witness;
  std::vector<classes::NamedTable> tables;
  bool budget_exceeded = false;
  double millis = 0;
};

struct Report {
  std::string command;
  std::uint64_t seed = 1;
  int bound = 10;
  std::vector<Result> results;
  Json extra;  // command-specific data, e.g. search counts

  Json to_json() const;
  /// Fail beats budget, budget beats pass.
  int exit_code() const;
};

Result from_outcome(const propcheck::CheckOutcome& o);
Json table_json(const classes::NamedTable& t);

/// Runs the tool; args excludes the program name. Text goes to out, errors
/// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ezd::cli
