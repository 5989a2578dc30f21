#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ezd/propcheck/propcheck.hpp"

namespace ezd::propcheck {

struct SearchConfig {
  std::size_t max_dim = 6;
  std::string field = "GF(2)";
  std::uint64_t seed = 1;
  std::size_t trials = 500;
  int bound = 10;
};

/// A random local algebra with a pair (ex, ey) exact on it, a candidate C and
/// a candidate M, recorded as a script so that it can be rebuilt verbatim.
struct GeneratedInstance {
  std::size_t trial = 0;
  std::string recipe;
  Instance instance;
};

/// Rejection counts of the generator, by stage.
struct GeneratorStats {
  std::size_t too_large = 0;  // dimension above the limit, or invalid presentation
  std::size_t no_pair = 0;    // no exact pair among the sampled radical elements
};

/// The random stream of one trial; trials are independent of each other.
std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Runs the generator once; nullopt when the algebra is rejected.
std::optional<GeneratedInstance> generate_instance(std::mt19937_64& rng, const SearchConfig& cfg,
                                                   std::size_t trial, GeneratorStats* stats = nullptr);

/// The recipe text for an algebra, pair, C and M.
std::string instance_recipe(const std::string& ring, const std::string& x, const std::string& y,
                            const std::string& c, const std::string& m);

struct SearchReport {
  SearchConfig config;
  std::size_t trials_run = 0;
  GeneratorStats generator;
  std::size_t c_not_exact = 0;      // pair not exact on C
  std::size_t m_not_exact = 0;      // pair not exact on M
  std::size_t m_not_in_g = 0;       // M outside G_C
  std::size_t undetermined = 0;     // some table incomplete (budget)
  std::size_t examined = 0;         // fully gated instances
  std::size_t passed = 0;
  std::vector<VerificationResult> failures;  // at most one: the search halts on it

  bool budget_exceeded() const { return undetermined != 0; }
  /// Deterministic plain-text rendering.
  std::string render() const;
};

/// Tests, on random gated instances, whether M in G_C(A) with (x, y) exact on
/// A, C and M forces M/xM into G_{C/xC}(A/xA).
SearchReport search_counterexamples(const SearchConfig& cfg);

/// The question itself on one instance.
VerificationResult verify_open_question(const Instance& in);

}  // namespace ezd::propcheck
