#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ezd/linalg/matrix.hpp"
#include "ezd/presentation/groebner.hpp"
#include "ezd/presentation/script.hpp"

namespace ezd::algmod {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using presentation::Monomial;
using presentation::Polynomial;
using presentation::QuotientPresentation;

/// The quotient is finite-dimensional but not local (some variable is not
/// nilpotent), or it is the zero ring.
class NonLocalError : public Error {
 public:
  using Error::Error;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An element of an algebra, stored as staircase coordinates of its normal form.
class Element {
 public:
  Element(AlgebraPtr algebra, std::vector<Scalar> coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  bool is_zero() const;
  /// Constant coordinate vanishes.
  bool in_radical() const;
  bool is_unit() const { return !in_radical(); }
  Polynomial polynomial() const;
  /// Multiplication by this element on the regular module.
  Matrix regular_action() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Scalar> coords_;
};

/// A finite-dimensional commutative local k-algebra k[x1..xn]/I with its
/// staircase basis and exact structure constants.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validates finiteness, locality, commutativity and associativity.
  static AlgebraPtr create(QuotientPresentation presentation);

  const QuotientPresentation& presentation() const { return presentation_; }
  const Field& field() const { return presentation_.field; }
  std::size_t dim() const { return presentation_.dim(); }
  std::size_t num_variables() const { return presentation_.variables.size(); }
  const std::vector<std::string>& variables() const { return presentation_.variables; }
  /// Multiplication by staircase[i] on the regular module.
  const Matrix& basis_action(std::size_t i) const { return table_.at(i); }
  /// Multiplication by the v-th variable on the regular module.
  const Matrix& variable_action(std::size_t v) const { return variable_actions_.at(v); }
  /// Staircase indices of the monomials of degree >= 1 (a basis of the radical).
  std::vector<std::size_t> radical_basis() const;

  Element element(const Polynomial& p) const;
  Element element(const std::vector<Scalar>& coords) const;
  Element zero() const;
  Element one() const;
  Element variable(std::size_t v) const;

  /// Same field, variables, order and Groebner basis.
  bool same_as(const Algebra& other) const;
  std::string describe() const { return presentation_.describe(); }

 private:
  explicit Algebra(QuotientPresentation presentation);

  QuotientPresentation presentation_;
  std::vector<Matrix> table_;
  std::vector<Matrix> variable_actions_;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || a->same_as(*b);
}

/// A k[x1..xn]/I presentation built straight from generator polynomials.
AlgebraPtr make_algebra(const Field& field, std::vector<std::string> variables,
                        std::vector<Polynomial> generators,
                        presentation::MonomialOrder order = presentation::MonomialOrder::DegRevLex);

AlgebraPtr algebra_from_decl(const presentation::RingDecl& decl);
/// Parses ring text such as "GF(101)[x,y]/(x^2, x*y, y^2)".
AlgebraPtr parse_algebra(std::string_view text);

}  // namespace ezd::algmod
