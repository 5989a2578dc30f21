#include "ezd/homology/derived.hpp"

#include <algorithm>

#include "ezd/algmod/isomorphism.hpp"

namespace ezd::homology {

using algmod::dual_k;
using algmod::is_free;

std::vector<Matrix> staircase_actions(const Module& m) {
  const auto& q = m.algebra()->presentation();
  std::vector<Matrix> out;
  out.reserve(q.dim());
  out.push_back(Matrix::identity(m.field(), m.dim()));
  for (std::size_t t = 1; t < q.dim(); ++t) {
    const auto& mono = q.staircase[t];
    std::size_t var = 0;
    while (mono[var] == 0) ++var;
    auto parent = mono;
    --parent[var];
    out.push_back(m.action(var) * out[q.index_of(parent)]);
  }
  return out;
}

namespace {

Matrix act(const std::vector<Matrix>& basis, const Element& a, std::size_t n) {
  Matrix out(a.algebra()->field(), n, n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (!a.coords()[t].is_zero()) out += a.coords()[t] * basis[t];
  }
  return out;
}

// d_i^* : N^{b_{i-1}} -> N^{b_i}, (n_r) -> (sum_r a_rj n_r)_j
Matrix hom_dual(const AlgebraMatrix& a, const std::vector<Matrix>& basis, std::size_t n, const linalg::Field& f) {
  Matrix out(f, a.cols * n, a.rows * n);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (!a.at(r, j).is_zero()) out.set_block(j * n, r * n, act(basis, a.at(r, j), n));
    }
  }
  return out;
}

// d_i (x) N : N^{b_i} -> N^{b_{i-1}}, (n_j) -> (sum_j a_rj n_j)_r
Matrix tensor_map(const AlgebraMatrix& a, const std::vector<Matrix>& basis, std::size_t n, const linalg::Field& f) {
  Matrix out(f, a.rows * n, a.cols * n);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (!a.at(r, j).is_zero()) out.set_block(r * n, j * n, act(basis, a.at(r, j), n));
    }
  }
  return out;
}

template <class MapFn>
std::vector<std::size_t> homology_dims(const FreeResolution& f, const Module& n, int bound, MapFn&& map) {
  std::vector<std::size_t> dims;
  const std::size_t len = f.length();
  const bool empty = f.betti.empty();
  auto basis = staircase_actions(n);
  // ranks[i] = rank of the map attached to d_i, for 1 <= i <= len
  std::vector<std::size_t> ranks(len + 2, 0);
  for (std::size_t i = 1; i <= len && i <= f.algebra_differentials.size(); ++i) {
    if (i > static_cast<std::size_t>(bound) + 1) break;
    ranks[i] = linalg::rank(map(f.algebra_differentials[i - 1], basis, n.dim(), n.field()));
  }
  for (int i = 0; i <= bound; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (empty || (f.terminated && ui > len)) {
      dims.push_back(0);
      continue;
    }
    if (ui > len) break;
    // needs d_{i+1} unless the resolution stops at F_i
    if (ui + 1 > len && !f.terminated) break;
    std::size_t next = ui + 1 <= len ? ranks[ui + 1] : 0;
    dims.push_back(f.betti[ui] * n.dim() - next - ranks[ui]);
  }
  return dims;
}

bool resolution_ready(const FreeResolution& r, int bound) {
  return r.terminated || r.betti.size() >= static_cast<std::size_t>(bound) + 2;
}

// Advances whichever builder has the smaller resolution so far until one
// covers degrees 0..bound+1. Returns 1 or 2 for the winner, or the one that
// got further when both run out of budget.
int lockstep(ResolutionBuilder& a, ResolutionBuilder& b, int bound) {
  while (true) {
    if (resolution_ready(a.result(), bound)) return 1;
    if (resolution_ready(b.result(), bound)) return 2;
    if (a.done() && b.done()) return a.result().betti.size() >= b.result().betti.size() ? 1 : 2;
    bool pick_a = !a.done() && (b.done() || a.result().total_dim <= b.result().total_dim);
    (pick_a ? a : b).step();
  }
}

void finish(DimTable& t, const FreeResolution& res, const DerivedOptions& opt) {
  t.budget_exceeded = !resolution_ready(res, t.bound);
  t.terminated = res.terminated;
  if (opt.certify && !t.terminated && t.vanishes_up_to_bound()) {
    std::size_t window = std::min<std::size_t>(static_cast<std::size_t>(t.bound), res.syzygies.size());
    t.period = syzygy_periodicity(res, window, opt.seed);
  }
}

DimTable trivial_table(int bound, std::size_t degree_zero) {
  DimTable t;
  t.bound = bound;
  t.route = Route::Trivial;
  t.terminated = true;
  t.dims.assign(static_cast<std::size_t>(bound) + 1, 0);
  t.dims[0] = degree_zero;
  return t;
}

}  // namespace

const char* route_name(bool is_ext, Route r) {
  switch (r) {
    case Route::Trivial: return is_ext ? "trivial (free or injective argument)" : "trivial (free argument)";
    case Route::First: return is_ext ? "projective resolution of the first argument" : "resolution of the first argument";
    case Route::Second: return is_ext ? "injective side via k-duality" : "resolution of the second argument";
  }
  return "?";
}

std::optional<std::size_t> DimTable::first_nonzero(std::size_t from) const {
  for (std::size_t i = from; i < dims.size(); ++i) {
    if (dims[i] != 0) return i;
  }
  return std::nullopt;
}

bool DimTable::vanishing_certified() const {
  if (!vanishes_up_to_bound()) return false;
  if (route == Route::Trivial || terminated) return true;
  return period && period->j <= static_cast<std::size_t>(bound);
}

std::vector<std::size_t> ext_from_resolution(const FreeResolution& f, const Module& n, int bound) {
  return homology_dims(f, n, bound, hom_dual);
}

std::vector<std::size_t> tor_from_resolution(const FreeResolution& f, const Module& n, int bound) {
  return homology_dims(f, n, bound, tensor_map);
}

std::optional<Periodicity> syzygy_periodicity(const FreeResolution& res, std::size_t window,
                                              std::uint64_t seed) {
  const std::size_t top = std::min(window, res.syzygies.size());
  for (std::size_t j = 2; j <= top; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      const Module& a = res.syzygies[i - 1];
      const Module& b = res.syzygies[j - 1];
      if (a.dim() == 0 || a.dim() != b.dim()) continue;
      auto v = algmod::is_isomorphic(a, b, seed);
      if (v.iso()) return Periodicity{i, j, *v.witness};
    }
  }
  return std::nullopt;
}

std::optional<Periodicity> syzygy_periodicity(const Module& m, std::size_t window, std::size_t budget) {
  // Omega^window is the kernel of the map out of F_{window-1}
  auto res = minimal_free_resolution(m, window == 0 ? 0 : window - 1, budget);
  return syzygy_periodicity(res, window);
}

DimTable ext_via(const Module& m, const Module& n, int bound, Route route, const DerivedOptions& opt) {
  algmod::require_same_algebra(m, n, "ext");
  if (route == Route::Trivial) throw Error("ext_via: choose a resolution route");
  DimTable t;
  t.bound = bound;
  t.route = route;
  const std::size_t steps = static_cast<std::size_t>(bound) + 1;
  if (route == Route::First) {
    auto res = minimal_free_resolution(m, steps, opt.budget);
    t.dims = ext_from_resolution(res, n, bound);
    finish(t, res, opt);
  } else {
    auto res = minimal_free_resolution(dual_k(n), steps, opt.budget);
    t.dims = ext_from_resolution(res, dual_k(m), bound);
    finish(t, res, opt);
  }
  return t;
}

DimTable tor_via(const Module& m, const Module& n, int bound, Route route, const DerivedOptions& opt) {
  algmod::require_same_algebra(m, n, "tor");
  if (route == Route::Trivial) throw Error("tor_via: choose a resolution route");
  DimTable t;
  t.bound = bound;
  t.route = route;
  const std::size_t steps = static_cast<std::size_t>(bound) + 1;
  const Module& resolved = route == Route::First ? m : n;
  const Module& other = route == Route::First ? n : m;
  auto res = minimal_free_resolution(resolved, steps, opt.budget);
  t.dims = tor_from_resolution(res, other, bound);
  finish(t, res, opt);
  return t;
}

DimTable ext(const Module& m, const Module& n, int bound, const DerivedOptions& opt) {
  algmod::require_same_algebra(m, n, "ext");
  Module nd = dual_k(n);
  if (is_free(m) || is_free(nd)) return trivial_table(bound, algmod::hom_space(m, n).basis.size());
  ResolutionBuilder first(m, opt.budget);
  ResolutionBuilder second(nd, opt.budget);
  DimTable t;
  t.bound = bound;
  if (lockstep(first, second, bound) == 1) {
    t.route = Route::First;
    t.dims = ext_from_resolution(first.result(), n, bound);
    finish(t, first.result(), opt);
  } else {
    t.route = Route::Second;
    t.dims = ext_from_resolution(second.result(), dual_k(m), bound);
    finish(t, second.result(), opt);
  }
  return t;
}

DimTable tor(const Module& m, const Module& n, int bound, const DerivedOptions& opt) {
  algmod::require_same_algebra(m, n, "tor");
  if (is_free(m) || is_free(n)) return trivial_table(bound, algmod::tensor_module(m, n).dim());
  ResolutionBuilder first(m, opt.budget);
  ResolutionBuilder second(n, opt.budget);
  DimTable t;
  t.bound = bound;
  if (lockstep(first, second, bound) == 1) {
    t.route = Route::First;
    t.dims = tor_from_resolution(first.result(), n, bound);
    finish(t, first.result(), opt);
  } else {
    t.route = Route::Second;
    t.dims = tor_from_resolution(second.result(), m, bound);
    finish(t, second.result(), opt);
  }
  return t;
}

std::string DimValue::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::Exactly: return std::to_string(value);
    case Kind::AtLeast: return ">= " + std::to_string(value);
  }
  return "?";
}

bool certainly_le(const DimValue& a, const DimValue& b) {
  using K = DimValue::Kind;
  if (a.kind == K::NegInf) return true;
  if (b.kind == K::NegInf) return false;
  if (a.kind == K::AtLeast) return false;
  return a.value <= b.value;
}

bool possibly_le(const DimValue& a, const DimValue& b) {
  using K = DimValue::Kind;
  if (a.kind == K::NegInf) return true;
  if (b.kind == K::NegInf) return false;
  if (b.kind == K::AtLeast) return true;
  return a.value <= b.value;
}

DimValue pd_bounded(const Module& m, int bound, std::size_t budget) {
  if (m.dim() == 0) return DimValue::neg_inf();
  // a few steps suffice: past depth zero only a free module has finite pd
  const int depth = std::min(bound, kCollapseDepth);
  auto res = minimal_free_resolution(m, static_cast<std::size_t>(depth), budget);
  const bool free = is_free(m);
  if (res.terminated) {
    if ((res.length() == 0) != free) throw Error("pd_bounded: resolution disagrees with the freeness test");
    return DimValue::exactly(static_cast<int>(res.length()));
  }
  if (free) throw Error("pd_bounded: a free module failed to terminate");
  DimValue v = DimValue::at_least(bound + 1);
  v.collapsed = res.budget_exceeded || depth < bound;
  return v;
}

DimValue id_bounded(const Module& m, int bound, std::size_t budget) {
  return pd_bounded(dual_k(m), bound, budget);
}

}  // namespace ezd::homology
