#include "ezd/linalg/field.hpp"

namespace ezd::linalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error("GF(" + std::to_string(p) + "): " + std::to_string(p) +
                " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace ezd::linalg
