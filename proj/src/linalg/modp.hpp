#pragma once

#include <cstdint>

namespace ezd::linalg::detail {

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

inline std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// p prime, a != 0 mod p.
inline std::uint32_t invmod(std::uint32_t a, std::uint32_t p) { return powmod(a, p - 2, p); }

}  // namespace ezd::linalg::detail
