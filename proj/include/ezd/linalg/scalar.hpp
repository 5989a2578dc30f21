#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>

#include "ezd/linalg/field.hpp"

namespace ezd::linalg {

/// An exact field element. Always stored in canonical form (a residue in
/// [0, p) or a rational in lowest terms), so equality is structural.
class Scalar {
 public:
  Scalar() : Scalar(kDefaultField, 0) {}
  Scalar(const Field& field, long long value);
  Scalar(const Field& field, const Rational& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }
  static Scalar from_residue(const Field& field, std::uint32_t residue);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only meaningful for prime fields.
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Value as a rational; only meaningful over QQ.
  const Rational& rational() const { return std::get<Rational>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  /// Throws ezd::Error for zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint32_t, Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Uniform over GF(p); small integers in [-9, 9] over QQ.
Scalar random_scalar(const Field& field, std::mt19937_64& rng);

}  // namespace ezd::linalg
