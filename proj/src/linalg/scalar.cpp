#include "ezd/linalg/scalar.hpp"

#include <ostream>

#include "modp.hpp"

namespace ezd::linalg {

Scalar::Scalar(const Field& field, long long value) : field_(field) {
  if (field.is_prime_field()) {
    long long p = field.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint32_t>(r);
  } else {
    value_ = Rational(value);
  }
}

Scalar::Scalar(const Field& field, const Rational& value) : field_(field) {
  if (field.is_prime_field()) {
    const std::uint32_t p = field.characteristic();
    BigInt num = boost::multiprecision::numerator(value) % p;
    BigInt den = boost::multiprecision::denominator(value) % p;
    if (num < 0) num += p;
    if (den == 0) throw Error("rational with denominator divisible by " + std::to_string(p));
    auto n = static_cast<std::uint32_t>(num);
    auto d = static_cast<std::uint32_t>(den);
    value_ = detail::mulmod(n, detail::invmod(d, p), p);
  } else {
    value_ = value;
  }
}

Scalar Scalar::from_residue(const Field& field, std::uint32_t residue) {
  Scalar s(field, 0);
  s.value_ = residue % field.characteristic();
  return s;
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return std::get<std::uint32_t>(value_) == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<Rational>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error("scalar field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime_field()) {
    auto v = std::get<std::uint32_t>(value_);
    r.value_ = v == 0 ? 0u : field_.characteristic() - v;
  } else {
    r.value_ = Rational(-std::get<Rational>(value_));
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_prime_field()) {
    value_ = detail::addmod(std::get<std::uint32_t>(value_), std::get<std::uint32_t>(other.value_),
                            field_.characteristic());
  } else {
    std::get<Rational>(value_) += std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_prime_field()) {
    value_ = detail::mulmod(std::get<std::uint32_t>(value_), std::get<std::uint32_t>(other.value_),
                            field_.characteristic());
  } else {
    std::get<Rational>(value_) *= std::get<Rational>(other.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (field_.is_prime_field()) {
    r.value_ = detail::invmod(std::get<std::uint32_t>(value_), field_.characteristic());
  } else {
    r.value_ = Rational(1) / std::get<Rational>(value_);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<Rational>(value_).str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime_field()) {
    return Scalar::from_residue(field, static_cast<std::uint32_t>(rng() % field.characteristic()));
  }
  return Scalar(field, static_cast<long long>(rng() % 19) - 9);
}

}  // namespace ezd::linalg
