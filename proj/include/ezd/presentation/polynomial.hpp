#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ezd/linalg/scalar.hpp"

namespace ezd::presentation {

using linalg::Field;
using linalg::Scalar;

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

enum class MonomialOrder { DegRevLex, Lex };

std::string order_name(MonomialOrder order);

/// Strict "a > b" in the given order (variables x1 > x2 > ...).
bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order);
std::uint32_t degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
/// b / a, requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars);

struct Term {
  Scalar coeff;
  Monomial exponents;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial; terms distinct, nonzero, sorted descending in `order`.
class Polynomial {
 public:
  Polynomial(const Field& field, std::size_t nvars, MonomialOrder order);
  static Polynomial constant(const Field& field, std::size_t nvars, MonomialOrder order,
                             const Scalar& c);
  static Polynomial variable(const Field& field, std::size_t nvars, MonomialOrder order,
                             std::size_t index);
  static Polynomial monomial(const Field& field, MonomialOrder order, const Scalar& c,
                             const Monomial& m);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(std::uint32_t e) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;
  /// Same polynomial re-sorted for another order.
  Polynomial with_order(MonomialOrder order) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void normalize();

  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

}  // namespace ezd::presentation
