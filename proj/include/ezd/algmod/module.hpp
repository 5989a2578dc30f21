#pragma once

#include <string>
#include <vector>

#include "ezd/algmod/algebra.hpp"

namespace ezd::algmod {

/// A finite-dimensional module, given by one action matrix per algebra
/// variable. Construction checks that the actions commute and satisfy the
/// defining relations; an ezd::Error is thrown otherwise.
class Module {
 public:
  Module(AlgebraPtr algebra, std::vector<Matrix> actions);
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t v) const { return actions_.at(v); }
  const std::vector<Matrix>& actions() const { return actions_; }

  /// Action of a monomial in the variables (exponents need not be standard).
  Matrix monomial_action(const Monomial& m) const;
  Matrix polynomial_action(const Polynomial& p) const;
  Matrix element_action(const Element& r) const;

  std::string describe() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> actions_;
};

/// An A-linear map; construction checks that the matrix intertwines the actions.
class Morphism {
 public:
  Morphism(Module source, Module target, Matrix matrix);
  static Morphism identity(const Module& m);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_isomorphism() const;

 private:
  Module source_;
  Module target_;
  Matrix matrix_;
};

/// Whether fX_v = Y_v f for every variable v.
bool intertwines(const Matrix& f, const Module& source, const Module& target);

/// Throws unless both modules live over the same algebra.
void require_same_algebra(const Module& a, const Module& b, const char* what);

}  // namespace ezd::algmod
