#pragma once

#include <cstddef>
#include <vector>

#include "ezd/algmod/constructions.hpp"

namespace ezd::homology {

using algmod::AlgebraPtr;
using algmod::Element;
using algmod::Module;
using algmod::Morphism;
using linalg::Matrix;

inline constexpr std::size_t kDefaultBettiBudget = 10000;
inline constexpr int kDefaultBound = 10;

/// A matrix with entries in the algebra; column j is the image of the j-th
/// basis vector of the source free module.
struct AlgebraMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> entries;  // row-major

  const Element& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
  bool entries_in_radical() const;
};

/// A minimal free resolution F_bound -> ... -> F_0 -> M -> 0, possibly cut
/// short when it terminates or the Betti budget runs out. Free modules A^b use
/// the basis e_{j,t} = m_t e_j at index j*dim A + t (m_t the staircase).
struct FreeResolution {
  Module module;
  std::vector<std::size_t> betti;           // b_0 .. b_length
  Matrix augmentation;                      // F_0 -> M
  std::vector<Matrix> differentials;        // differentials[i-1] = d_i : F_i -> F_{i-1}
  std::vector<AlgebraMatrix> algebra_differentials;
  std::vector<Module> syzygies;             // syzygies[i-1] = Omega^i = ker of the map out of F_{i-1}
  std::vector<Matrix> syzygy_inclusions;    // Omega^i -> F_{i-1}
  bool terminated = false;                  // some syzygy vanished; then pd = length
  bool budget_exceeded = false;
  std::size_t total_dim = 0;                // sum of dim F_i

  std::size_t length() const { return betti.empty() ? 0 : betti.size() - 1; }
  std::size_t free_dim(std::size_t i) const;
};

/// Extends a resolution one step at a time; used to run competing routes in
/// lockstep.
class ResolutionBuilder {
 public:
  ResolutionBuilder(const Module& m, std::size_t budget = kDefaultBettiBudget);
  /// Computes the next free module and differential. Returns false when the
  /// resolution terminated or the budget ran out.
  bool step();
  bool done() const { return res_.terminated || res_.budget_exceeded; }
  const FreeResolution& result() const { return res_; }

 private:
  FreeResolution res_;
  std::size_t budget_;
  Module pending_;           // the syzygy still to be covered
  Matrix pending_inclusion;  // its inclusion into the previous free module
};

/// F_0 .. F_bound (fewer if the resolution terminates).
FreeResolution minimal_free_resolution(const Module& m, std::size_t bound,
                                       std::size_t budget = kDefaultBettiBudget);

/// Images m_t * v of a vector v for every staircase monomial m_t, as columns.
Matrix orbit_columns(const Module& m, const Matrix& v);

}  // namespace ezd::homology
