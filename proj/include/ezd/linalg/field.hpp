#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ezd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ezd

namespace ezd::linalg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

/// The base field: a prime field GF(p) or the rationals.
class Field {
 public:
  /// Throws ezd::Error unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(0); }

  bool is_prime_field() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  /// Characteristic; 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

inline const Field kDefaultField = Field::prime(101);

}  // namespace ezd::linalg
