#include "ezd/classes/pc.hpp"

namespace ezd::classes {

using algmod::hom_space;
using algmod::HomSpace;

namespace {

Matrix act(const std::vector<Matrix>& basis, const Element& a, std::size_t n, const linalg::Field& f) {
  Matrix out(f, n, n);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (!a.coords()[t].is_zero()) out += a.coords()[t] * basis[t];
  }
  return out;
}

// C (x) d for an algebra matrix d: block (r, j) is the action of d_rj on C.
Matrix tensor_with(const homology::AlgebraMatrix& d, const std::vector<Matrix>& basis, const Module& c) {
  const std::size_t n = c.dim();
  Matrix out(c.field(), d.rows * n, d.cols * n);
  for (std::size_t r = 0; r < d.rows; ++r) {
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (!d.at(r, j).is_zero()) out.set_block(r * n, j * n, act(basis, d.at(r, j), n, c.field()));
    }
  }
  return out;
}

// dims[p+1] is the dimension at position p; ranks[i] is the rank of the map
// into position i-1. Positions without an incoming map are judged only when
// the complex is complete there.
ExactnessReport chain_exactness(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks,
                                bool complete) {
  ExactnessReport r;
  for (std::size_t q = 0; q < dims.size(); ++q) {
    std::size_t in = 0;
    if (q < ranks.size()) {
      in = ranks[q];
    } else if (!complete) {
      break;
    }
    const std::size_t out = q >= 1 && q - 1 < ranks.size() ? ranks[q - 1] : 0;
    const std::size_t h = dims[q] - in - out;
    r.homology.push_back(h);
    if (h != 0 && !r.first_failure) {
      r.first_failure = static_cast<int>(q) - 1;
      r.exact = false;
    }
  }
  return r;
}

// Hom(T, -) applied to the augmented complex, up to position depth-1.
ExactnessReport hom_exactness(const Module& t, const ProperResolution& x, std::size_t depth) {
  std::vector<HomSpace> spaces;
  spaces.push_back(hom_space(t, x.module));
  const std::size_t top = std::min(depth, x.terms.size());
  for (std::size_t i = 0; i < top; ++i) spaces.push_back(hom_space(t, x.terms[i]));
  std::vector<std::size_t> dims, ranks;
  for (const auto& s : spaces) dims.push_back(s.basis.size());
  for (std::size_t i = 0; i + 1 < spaces.size(); ++i) {
    const Matrix& f = i == 0 ? x.augmentation : x.differentials[i - 1];
    ranks.push_back(linalg::rank(hom_post(spaces[i + 1], spaces[i], f)));
  }
  // one more map lets the last position be judged
  bool complete = false;
  if (top < x.terms.size()) {
    HomSpace next = hom_space(t, x.terms[top]);
    const Matrix& f = top == 0 ? x.augmentation : x.differentials[top - 1];
    ranks.push_back(linalg::rank(hom_post(next, spaces.back(), f)));
  } else {
    complete = x.terminated;
  }
  return chain_exactness(dims, ranks, complete);
}

}  // namespace

ProperResolution build_proper_pc_resolution(const Module& m, const Semidualizing& c, int length, int proper_depth,
                                            std::size_t budget) {
  if (!c.holds()) throw Error("build_proper_pc_resolution: C is not verified semidualizing");
  algmod::require_same_algebra(c.module, m, "build_proper_pc_resolution");
  const Module& cm = c.module;
  HomSpace h = hom_space(cm, m);
  ProperResolution x{m, cm, homology::minimal_free_resolution(h.module, static_cast<std::size_t>(length), budget),
                     {}, Matrix(m.field(), m.dim(), 0), {}, false, {}, {}, {}, 0};
  const auto& base = x.base;
  x.terminated = base.terminated;
  const std::size_t d = m.algebra()->dim();
  for (std::size_t b : base.betti) {
    x.terms.push_back(algmod::direct_sum(std::vector<Module>(b, cm), m.algebra()));
  }
  if (!base.betti.empty()) {
    // generator j of P_0 maps to g_j in Hom(C, M); c (x) e_j goes to g_j(c)
    Matrix aug(m.field(), m.dim(), base.betti[0] * cm.dim());
    for (std::size_t j = 0; j < base.betti[0]; ++j) {
      aug.set_block(0, j * cm.dim(), h.to_matrix(base.augmentation.column(j * d)));
    }
    x.augmentation = Morphism(x.terms[0], m, aug).matrix();
    auto basis = homology::staircase_actions(cm);
    for (std::size_t i = 1; i <= base.algebra_differentials.size(); ++i) {
      Matrix di = tensor_with(base.algebra_differentials[i - 1], basis, cm);
      x.differentials.push_back(Morphism(x.terms[i], x.terms[i - 1], di).matrix());
    }
  }

  std::vector<std::size_t> dims{m.dim()}, ranks;
  for (const auto& t : x.terms) dims.push_back(t.dim());
  if (!x.terms.empty()) ranks.push_back(linalg::rank(x.augmentation));
  for (const auto& di : x.differentials) ranks.push_back(linalg::rank(di));
  x.augmented = chain_exactness(dims, ranks, x.terminated || x.terms.empty());

  const std::size_t depth = proper_depth < 0 ? x.terms.size() : static_cast<std::size_t>(proper_depth);
  x.checked_depth = static_cast<int>(std::min(depth, x.terms.size()));
  x.proper = hom_exactness(cm, x, depth);
  x.proper_rank2 = hom_exactness(algmod::direct_sum(cm, cm), x, depth);
  return x;
}

namespace {

RelativeDim relative(const Module& target, bool member_found, const MembershipReport& mem,
                     bool projective_side, const Options& opt) {
  RelativeDim r;
  r.membership = mem;
  if (mem.verdict.kind == Verdict::Kind::Undetermined) {
    r.defined = false;
    r.note = "membership undetermined: " + mem.verdict.witness;
    return r;
  }
  if (!member_found) {
    // a finite relative dimension would force membership in the class
    r.value = DimValue::at_least(opt.bound + 1);
    r.note = "not in " + mem.class_name + ": " + mem.verdict.witness;
    return r;
  }
  r.by_formula = true;
  r.value = projective_side ? homology::pd_bounded(target, opt.bound, opt.derived.budget)
                            : homology::id_bounded(target, opt.bound, opt.derived.budget);
  if (r.value.collapsed) r.note = "value from the artinian collapse";
  return r;
}

}  // namespace

RelativeDim pc_pd(const Module& m, const Semidualizing& c, const Options& opt) {
  if (!c.holds()) throw Error("pc_pd: C is not verified semidualizing");
  if (m.dim() == 0) return RelativeDim{DimValue::neg_inf(), true, true, std::nullopt, "zero module"};
  MembershipReport mem = in_B_C(m, c, opt);
  RelativeDim r = relative(algmod::hom_module(c.module, m), mem.holds(), mem, true, opt);
  if (r.by_formula && r.value.kind == DimValue::Kind::Exactly && !r.value.collapsed) {
    // the proper resolution built from the same data must stop at the same place
    auto x = build_proper_pc_resolution(m, c, r.value.value + 1, 0, opt.derived.budget);
    if (!x.terminated || static_cast<int>(x.length()) != r.value.value) {
      throw Error("pc_pd: proper resolution length disagrees with pd Hom(C,M)");
    }
  }
  return r;
}

RelativeDim fc_pd(const Module& m, const Semidualizing& c, const Options& opt) {
  RelativeDim r = pc_pd(m, c, opt);
  r.note = r.note.empty() ? "F_C and P_C agree on finite modules" : r.note + "; F_C and P_C agree on finite modules";
  return r;
}

RelativeDim ic_id(const Module& m, const Semidualizing& c, const Options& opt) {
  if (!c.holds()) throw Error("ic_id: C is not verified semidualizing");
  if (m.dim() == 0) return RelativeDim{DimValue::neg_inf(), true, true, std::nullopt, "zero module"};
  MembershipReport mem = in_A_C(m, c, opt);
  Module cm = algmod::tensor_module(c.module, m);
  RelativeDim r = relative(cm, mem.holds(), mem, false, opt);
  if (r.by_formula && r.value.kind == DimValue::Kind::Exactly) {
    // id N = n means Ext^n(k, N) != 0 and nothing above it
    auto e = homology::ext(algmod::residue_field(m.algebra()), cm, opt.bound, opt.derived);
    const auto n = static_cast<std::size_t>(r.value.value);
    if (e.dims.size() > n && (e.dims[n] == 0 || e.first_nonzero(n + 1))) {
      throw Error("ic_id: Ext(k, C (x) M) disagrees with id C (x) M");
    }
  }
  return r;
}

}  // namespace ezd::classes
