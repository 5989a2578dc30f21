#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ezd/linalg/matrix.hpp"
#include "ezd/presentation/polynomial.hpp"

namespace ezd::presentation {

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// The quotient ring has infinitely many standard monomials.
class InfiniteDimensionalError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultPairBudget = 10'000;

/// Full reduction of p modulo `basis` (leading terms of basis must be nonzero).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Reduced Groebner basis via Buchberger completion, monic and sorted by
/// ascending leading monomial. Throws BudgetExceededError when more than
/// `pair_budget` S-pairs are processed.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       std::size_t pair_budget = kDefaultPairBudget);

/// Standard monomials of a reduced Groebner basis, sorted by degree then
/// descending in the basis order; throws InfiniteDimensionalError.
std::vector<Monomial> quotient_basis(const std::vector<Polynomial>& groebner, std::size_t nvars,
                                     MonomialOrder order);

/// A finite-dimensional quotient k[x1..xn]/I with its staircase basis.
struct QuotientPresentation {
  Field field = linalg::kDefaultField;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<Polynomial> ideal_generators;
  std::vector<Polynomial> groebner;
  std::vector<Monomial> staircase;

  std::size_t dim() const { return staircase.size(); }
  /// Index of a standard monomial in the staircase, or npos.
  std::size_t index_of(const Monomial& m) const;
  /// Staircase coordinates of the normal form of p.
  std::vector<Scalar> coordinates(const Polynomial& p) const;
  /// The polynomial sum(coords[i] * staircase[i]).
  Polynomial from_coordinates(const std::vector<Scalar>& coords) const;
  Polynomial zero() const;
  Polynomial variable(std::size_t i) const;

  std::string describe() const;
};

/// Builds the presentation: Groebner basis, then the finite staircase.
QuotientPresentation make_presentation(const Field& field, std::vector<std::string> variables,
                                       std::vector<Polynomial> generators,
                                       MonomialOrder order = MonomialOrder::DegRevLex,
                                       std::size_t pair_budget = kDefaultPairBudget);

/// table[i] is the matrix of multiplication by staircase[i]; its column j holds
/// the coordinates of staircase[i] * staircase[j].
std::vector<linalg::Matrix> structure_constants(const QuotientPresentation& q);

}  // namespace ezd::presentation
