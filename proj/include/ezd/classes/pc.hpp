#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ezd/classes/classes.hpp"
#include "ezd/homology/resolution.hpp"

namespace ezd::classes {

using homology::DimValue;

/// Exactness of one complex of k-spaces, indexed from the augmentation target
/// (position -1) upward.
struct ExactnessReport {
  bool exact = true;
  std::optional<int> first_failure;  // lowest position where homology is nonzero
  std::vector<std::size_t> homology;  // homology dimension at positions -1, 0, 1, ...
};

/// ... -> C (x) P_1 -> C (x) P_0 -> M -> 0 with P a minimal free resolution of
/// Hom(C, M). Term i is C^{b_i}, indexed block by block.
struct ProperResolution {
  Module module;
  Module c;
  homology::FreeResolution base;     // resolution of Hom(C, M)
  std::vector<Module> terms;         // C (x) P_i
  Matrix augmentation;               // C (x) P_0 -> M, built from xi
  std::vector<Matrix> differentials;  // differentials[i-1] : term i -> term i-1
  bool terminated = false;

  ExactnessReport augmented;  // X+ itself
  ExactnessReport proper;     // Hom(C, X+)
  ExactnessReport proper_rank2;  // Hom(C^2, X+)
  int checked_depth = 0;      // positions -1 .. checked_depth-1 were examined

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  bool is_proper() const { return proper.exact; }
};

/// proper_depth limits the Hom(C^r, -) tests to the first terms; negative
/// means the whole computed complex.
ProperResolution build_proper_pc_resolution(const Module& m, const Semidualizing& c, int length,
                                            int proper_depth = -1,
                                            std::size_t budget = homology::kDefaultBettiBudget);

struct RelativeDim {
  DimValue value;
  /// True when the value comes from the formula pd Hom(C,M) or id C (x) M on a
  /// certified class member; false when the class test failed and the value is
  /// the lower bound forced by that failure.
  bool by_formula = false;
  bool defined = true;  // false when membership stayed undetermined
  std::optional<MembershipReport> membership;
  std::string note;
};

RelativeDim pc_pd(const Module& m, const Semidualizing& c, const Options& opt = {});
/// Flat and projective coincide for finite modules here; same value, relabelled.
RelativeDim fc_pd(const Module& m, const Semidualizing& c, const Options& opt = {});
RelativeDim ic_id(const Module& m, const Semidualizing& c, const Options& opt = {});

}  // namespace ezd::classes
