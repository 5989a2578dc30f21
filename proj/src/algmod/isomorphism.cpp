#include "ezd/algmod/isomorphism.hpp"

#include <random>
#include <sstream>

#include "ezd/algmod/constructions.hpp"

namespace ezd::algmod {

const char* kind_name(IsoVerdict::Kind k) {
  switch (k) {
    case IsoVerdict::Kind::Iso: return "Iso";
    case IsoVerdict::Kind::NotIso: return "NotIso";
    case IsoVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

IsoVerdict not_iso(std::string reason) { return IsoVerdict{IsoVerdict::Kind::NotIso, std::nullopt, std::move(reason)}; }

// q^h when it fits under the limit.
std::optional<std::uint64_t> candidate_count(const Field& f, std::size_t h) {
  if (f.is_rational()) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < h; ++i) {
    total *= f.characteristic();
    if (total > kExhaustiveIsoLimit) return std::nullopt;
  }
  return total;
}

}  // namespace

IsoVerdict is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, std::size_t budget) {
  require_same_algebra(m, n, "is_isomorphic");
  if (m.dim() != n.dim()) {
    return not_iso("dimensions differ: " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim()));
  }
  if (m.dim() == 0) {
    return IsoVerdict{IsoVerdict::Kind::Iso, Morphism::identity(m), "both modules are zero"};
  }
  auto lm = radical_layers(m);
  auto ln = radical_layers(n);
  if (lm != ln) return not_iso("radical layer dimensions differ: " + join(lm) + " vs " + join(ln));
  auto sm = radical_layers(dual_k(m));
  auto sn = radical_layers(dual_k(n));
  if (sm != sn) return not_iso("socle layer dimensions differ: " + join(sm) + " vs " + join(sn));

  HomSpace h = hom_space(m, n);
  const std::size_t hmn = h.basis.size();
  const std::size_t hnm = hom_space(n, m).basis.size();
  const std::size_t hmm = hom_space(m, m).basis.size();
  if (hmn != hmm || hnm != hmm) {
    return not_iso("Hom dimensions differ: dim Hom(M,N) = " + std::to_string(hmn) +
                   ", dim Hom(N,M) = " + std::to_string(hnm) + ", dim End(M) = " + std::to_string(hmm));
  }

  const Field& f = m.field();
  auto found = [&](const Matrix& coords) -> std::optional<IsoVerdict> {
    Matrix map = h.to_matrix(coords);
    if (!linalg::is_invertible(map)) return std::nullopt;
    return IsoVerdict{IsoVerdict::Kind::Iso, Morphism(m, n, map), "invertible element of Hom(M,N)"};
  };

  if (auto total = candidate_count(f, hmn)) {
    const std::uint32_t q = f.characteristic();
    for (std::uint64_t code = 0; code < *total; ++code) {
      Matrix coords(f, hmn, 1);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < hmn; ++i) {
        coords.set(i, 0, static_cast<long long>(rest % q));
        rest /= q;
      }
      if (auto v = found(coords)) return *v;
    }
    return not_iso("no element of Hom(M,N) is invertible (exhaustive search)");
  }

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < budget; ++trial) {
    if (auto v = found(Matrix::random(f, hmn, 1, rng))) return *v;
  }
  return IsoVerdict{IsoVerdict::Kind::Unknown, std::nullopt,
                    "invariants agree but " + std::to_string(budget) +
                        " random elements of Hom(M,N) were singular"};
}

}  // namespace ezd::algmod
