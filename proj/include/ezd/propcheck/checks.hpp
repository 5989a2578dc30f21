#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ezd/propcheck/propcheck.hpp"

namespace ezd::propcheck {

struct CheckOutcome {
  std::string id;         // source:line
  std::string statement;  // the check as written, pretty-printed
  Status status = Status::Inconclusive;
  std::string witness;
  std::vector<std::string> details;
  std::vector<classes::NamedTable> tables;
  int bound = 0;
  bool budget_exceeded = false;
  double millis = 0;
};

struct RunOptions {
  int bound = 10;  // used when a statement has no bound clause
  std::uint64_t seed = 1;
  bool timings = false;
  std::string source = "script";
};

/// Runs one check statement against the environment's declarations.
CheckOutcome run_check(const Environment& env, const CheckStmt& check, const std::string& script_text,
                       const RunOptions& opt);

/// Parses and loads text, then runs every check in order.
std::vector<CheckOutcome> run_script(const std::string& text, const RunOptions& opt);

/// Whether a check name belongs to a statement id: "A" for prop_A, "J" for
/// all prop_J parts, "K" for cor_K, "a" for fact_a, "dualizing", "H", or an
/// exact check name.
bool check_matches(const std::string& check, const std::string& id);

}  // namespace ezd::propcheck
