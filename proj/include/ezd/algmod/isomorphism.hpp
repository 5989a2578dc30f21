#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ezd/algmod/module.hpp"

namespace ezd::algmod {

/// Exhaustive search over Hom(M, N) when field-size^dim is at most this.
inline constexpr std::uint64_t kExhaustiveIsoLimit = 4096;
inline constexpr std::size_t kDefaultIsoBudget = 32;

struct IsoVerdict {
  enum class Kind { Iso, NotIso, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Morphism> witness;  // set for Iso
  std::string reason;

  bool iso() const { return kind == Kind::Iso; }
  bool not_iso() const { return kind == Kind::NotIso; }
};

const char* kind_name(IsoVerdict::Kind k);

/// Cheap invariants first, then seeded random combinations of a Hom(M, N)
/// basis tested for invertibility, with exhaustive enumeration when small.
IsoVerdict is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 1,
                         std::size_t budget = kDefaultIsoBudget);

}  // namespace ezd::algmod
