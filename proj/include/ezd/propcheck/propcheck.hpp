#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ezd/classes/pc.hpp"
#include "ezd/propcheck/environment.hpp"

namespace ezd::propcheck {

/// Standing data of one check: an algebra with a candidate pair (x, y), and
/// the modules the statement quantifies over. Nothing is assumed: each
/// verifier tests its own hypotheses. The recipe is a script that rebuilds
/// the instance.
struct Instance {
  std::string id;
  std::string recipe;
  AlgebraPtr algebra;
  Element x;
  Element y;
  std::optional<Module> c;  // semidualizing candidate (or B, D)
  std::optional<Module> m;
  std::optional<Module> n;  // an A/xA-module for the base change checks
  int bound = 10;
  std::uint64_t seed = 1;
  std::size_t budget = homology::kDefaultBettiBudget;  // Betti numbers per resolution
};

/// Loads a script and reads ring A (or the first ring), elements ex and ey,
/// and modules C, M, N when present.
Instance instance_from_script(const std::string& id, const std::string& recipe, int bound = 10,
                              std::uint64_t seed = 1);

enum class Status { Pass, Fail, Inconclusive };
const char* status_name(Status s);

struct VerificationResult {
  std::string prop;
  Status status = Status::Inconclusive;
  std::string witness;  // failing sub-check, or why nothing was concluded
  std::vector<std::string> details;
  std::vector<classes::NamedTable> tables;
  std::string instance_id;
  std::string recipe;
  int bound = 0;
  std::uint64_t seed = 0;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

enum class ClassKind { G, A, B };
const char* class_name(ClassKind k);

classes::MembershipReport membership(ClassKind k, const Module& m, const classes::Semidualizing& c,
                                     const classes::Options& opt);

VerificationResult verify_fact_a(const Instance& in);
VerificationResult verify_fact_b(const Instance& in);
VerificationResult verify_fact_c(const Instance& in);
VerificationResult verify_prop_A(const Instance& in);
VerificationResult verify_prop_B(const Instance& in);
VerificationResult verify_prop_C(const Instance& in);
VerificationResult verify_cor_dualizing(const Instance& in);
/// which = 1, 2, 3 for G, A, B.
VerificationResult verify_cor_K(const Instance& in, int which);
VerificationResult verify_prop_D(const Instance& in, int which);
enum class Direction { Forward, Backward };
/// which = 1, 2, 3 for the G, B, A parts.
VerificationResult verify_prop_J(const Instance& in, int which, Direction dir);
VerificationResult verify_prop_E(const Instance& in);
VerificationResult verify_prop_F(const Instance& in);
/// part = 1, 2, 3 for P_C, F_C, I_C.
VerificationResult verify_lemma_H(const Instance& in, int part);
/// part = 1, 2, 3; equality (part iv) is checked alongside.
VerificationResult verify_prop_G(const Instance& in, int part);
/// Free extension S of a base ring with C = S (x) omega: C is semidualizing,
/// not isomorphic to S, of infinite pd, and carries the pair (x, y). The
/// injective dimension is reported only.
VerificationResult verify_free_extension(const Instance& in);

}  // namespace ezd::propcheck
