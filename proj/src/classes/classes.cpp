#include "ezd/classes/classes.hpp"

#include <algorithm>
#include <functional>

namespace ezd::classes {

using algmod::hom_space;
using algmod::HomSpace;
using algmod::tensor_space;
using algmod::TensorSpace;

std::string EzdReport::failing_check() const {
  if (!x_nonzero_action) return "x_nonzero_action";
  if (!x_not_surjective) return "x_not_surjective";
  if (!ker_x_eq_im_y) return "ker_x_eq_im_y";
  if (!ker_y_eq_im_x) return "ker_y_eq_im_x";
  return "";
}

EzdReport is_ezd_pair(const Element& x, const Element& y, const Module& m) {
  if (!algmod::same_algebra(x.algebra(), m.algebra()) || !algmod::same_algebra(y.algebra(), m.algebra())) {
    throw Error("is_ezd_pair: elements of another algebra");
  }
  Matrix mx = m.element_action(x);
  Matrix my = m.element_action(y);
  const std::size_t rx = linalg::rank(mx);
  const std::size_t ry = linalg::rank(my);
  EzdReport r;
  r.x_nonzero_action = rx != 0;
  r.x_not_surjective = rx != m.dim();
  // im y inside ker x with equal dimensions, and symmetrically
  r.ker_x_eq_im_y = (mx * my).is_zero() && m.dim() - rx == ry;
  r.ker_y_eq_im_x = (my * mx).is_zero() && m.dim() - ry == rx;
  r.holds = r.x_nonzero_action && r.x_not_surjective && r.ker_x_eq_im_y && r.ker_y_eq_im_x;
  return r;
}

const char* kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::HoldsUpTo: return "HoldsUpTo";
    case Verdict::Kind::CertifiedAll: return "CertifiedAll";
    case Verdict::Kind::Fails: return "Fails";
    case Verdict::Kind::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::HoldsUpTo: return "HoldsUpTo(" + std::to_string(bound) + ")";
    case Kind::CertifiedAll: return "CertifiedAll";
    case Kind::Fails: return "Fails(" + witness + ")";
    case Kind::Undetermined: return "Undetermined(" + witness + ")";
  }
  return "?";
}

Matrix hom_post(const HomSpace& from, const HomSpace& to, const Matrix& f) {
  Matrix out(f.field(), to.basis.size(), from.basis.size());
  for (std::size_t c = 0; c < from.basis.size(); ++c) out.set_block(0, c, to.coordinates(f * from.basis[c]));
  return out;
}

Morphism homothety_map(const Module& c) {
  HomSpace h = hom_space(c, c);
  auto actions = homology::staircase_actions(c);
  Matrix chi(c.field(), h.basis.size(), actions.size());
  for (std::size_t t = 0; t < actions.size(); ++t) chi.set_block(0, t, h.coordinates(actions[t]));
  return Morphism(algmod::regular_module(c.algebra()), h.module, chi);
}

Morphism biduality_map(const Module& x, const Module& c) {
  HomSpace h1 = hom_space(x, c);
  HomSpace h2 = hom_space(h1.module, c);
  Matrix delta(x.field(), h2.basis.size(), x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    // evaluation at e_j: f_i -> f_i(e_j)
    Matrix ev(x.field(), c.dim(), h1.basis.size());
    for (std::size_t i = 0; i < h1.basis.size(); ++i) ev.set_block(0, i, h1.basis[i].column(j));
    delta.set_block(0, j, h2.coordinates(ev));
  }
  return Morphism(x, h2.module, delta);
}

Morphism gamma_map(const Module& m, const Module& c) {
  TensorSpace t = tensor_space(c, m);
  HomSpace h = hom_space(c, t.module);
  Matrix gamma(m.field(), h.basis.size(), m.dim());
  Matrix id_m = Matrix::identity(m.field(), m.dim());
  Matrix id_c = Matrix::identity(m.field(), c.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) {
    // c -> c (x) e_j
    Matrix g(m.field(), t.module.dim(), c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) g.set_block(0, i, t.pure(id_c.column(i), id_m.column(j)));
    gamma.set_block(0, j, h.coordinates(g));
  }
  return Morphism(m, h.module, gamma);
}

Morphism xi_map(const Module& m, const Module& c) {
  HomSpace h = hom_space(c, m);
  TensorSpace t = tensor_space(c, h.module);
  const std::size_t hd = h.basis.size();
  // on the k-tensor space: e_i (x) f_j -> f_j(e_i)
  Matrix raw(m.field(), m.dim(), c.dim() * hd);
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < hd; ++j) raw.set_block(0, i * hd + j, h.basis[j].column(i));
  }
  return Morphism(t.module, m, raw * t.lift);
}

namespace {

using TableFn = std::function<NamedTable(int)>;

constexpr int kProbeBound = 2;

bool is_iso(const Morphism& f) { return f.is_isomorphism(); }

std::string table_witness(const NamedTable& t, std::size_t degree) {
  std::string base = t.name;
  auto open = base.find('(');
  std::string fn = base.substr(0, open);
  std::string args = base.substr(open);
  std::string sep = t.is_ext ? "^" : "_";
  return fn + sep + std::to_string(degree) + args + " = " + std::to_string(t.table.dims[degree]) + " != 0";
}

std::string map_failure(const MembershipReport& r, const Morphism& map) {
  return r.natural_map + " is not an isomorphism (" + std::to_string(map.source().dim()) + " -> " +
         std::to_string(map.target().dim()) + ", rank " + std::to_string(linalg::rank(map.matrix())) + ")";
}

// Fills the verdict. With map_first the natural map is tested before any
// table; otherwise the tables come first and the map last. Tables are
// computed lazily in order.
template <class TableFns>
void conclude(MembershipReport& r, const Morphism& map, TableFns&& tables, const Options& opt, bool map_first) {
  r.natural_map_iso = is_iso(map);
  r.natural_map_witness = map;
  r.verdict.bound = opt.bound;
  if (map_first && !r.natural_map_iso) {
    r.verdict.kind = Verdict::Kind::Fails;
    r.verdict.witness = map_failure(r, map);
    return;
  }
  bool certified = true;
  std::string missing;
  for (auto& fn : tables) {
    // a shallow pass catches the usual low-degree failures cheaply
    NamedTable t = fn(std::min(opt.bound, kProbeBound));
    if (!t.table.first_nonzero(1) && opt.bound > kProbeBound) t = fn(opt.bound);
    r.tables.push_back(t);
    if (auto d = t.table.first_nonzero(1)) {
      r.verdict.kind = Verdict::Kind::Fails;
      r.verdict.witness = table_witness(t, *d);
      return;
    }
    if (!t.table.complete() && missing.empty()) {
      missing = "budget exceeded for " + t.name + " beyond degree " +
                std::to_string(t.table.dims.empty() ? -1 : static_cast<int>(t.table.dims.size()) - 1);
    }
    certified = certified && t.table.vanishing_certified();
  }
  if (!r.natural_map_iso) {
    r.verdict.kind = Verdict::Kind::Fails;
    r.verdict.witness = map_failure(r, map);
  } else if (!missing.empty()) {
    r.verdict.kind = Verdict::Kind::Undetermined;
    r.verdict.witness = missing;
  } else {
    r.verdict.kind = certified ? Verdict::Kind::CertifiedAll : Verdict::Kind::HoldsUpTo;
  }
}

void require(const Semidualizing& c, const Module& m, const char* what) {
  if (!c.holds()) throw Error(std::string(what) + ": C is not verified semidualizing");
  algmod::require_same_algebra(c.module, m, what);
}



}  // namespace

Semidualizing is_semidualizing(const Module& c, const Options& opt) {
  MembershipReport r;
  r.class_name = "semidualizing";
  r.natural_map = "chi";
  if (c.dim() == 0) {
    r.verdict = {Verdict::Kind::Fails, opt.bound, "C is zero"};
    return {c, r};
  }
  std::vector<TableFn> tables = {
      [&](int b) { return NamedTable{"Ext(C,C)", true, homology::ext(c, c, b, opt.derived)}; }};
  conclude(r, homothety_map(c), tables, opt, true);
  return {c, r};
}

MembershipReport in_G_C(const Module& x, const Semidualizing& c, const Options& opt) {
  require(c, x, "in_G_C");
  MembershipReport r;
  r.class_name = "G_C";
  r.natural_map = "delta";
  const Module& cm = c.module;
  std::vector<TableFn> tables = {
      [&](int b) { return NamedTable{"Ext(X,C)", true, homology::ext(x, cm, b, opt.derived)}; },
      [&](int b) {
        return NamedTable{"Ext(Hom(X,C),C)", true,
                          homology::ext(algmod::hom_module(x, cm), cm, b, opt.derived)};
      }};
  conclude(r, biduality_map(x, cm), tables, opt, false);
  return r;
}

MembershipReport in_A_C(const Module& m, const Semidualizing& c, const Options& opt) {
  require(c, m, "in_A_C");
  MembershipReport r;
  r.class_name = "A_C";
  r.natural_map = "gamma";
  const Module& cm = c.module;
  std::vector<TableFn> tables = {
      [&](int b) { return NamedTable{"Tor(C,M)", false, homology::tor(cm, m, b, opt.derived)}; },
      [&](int b) {
        return NamedTable{"Ext(C,C(x)M)", true,
                          homology::ext(cm, algmod::tensor_module(cm, m), b, opt.derived)};
      }};
  conclude(r, gamma_map(m, cm), tables, opt, false);
  return r;
}

MembershipReport in_B_C(const Module& m, const Semidualizing& c, const Options& opt) {
  require(c, m, "in_B_C");
  MembershipReport r;
  r.class_name = "B_C";
  r.natural_map = "xi";
  const Module& cm = c.module;
  std::vector<TableFn> tables = {
      [&](int b) { return NamedTable{"Ext(C,M)", true, homology::ext(cm, m, b, opt.derived)}; },
      [&](int b) {
        return NamedTable{"Tor(C,Hom(C,M))", false,
                          homology::tor(cm, algmod::hom_module(cm, m), b, opt.derived)};
      }};
  conclude(r, xi_map(m, cm), tables, opt, false);
  return r;
}

}  // namespace ezd::classes
