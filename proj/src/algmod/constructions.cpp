#include "ezd/algmod/constructions.hpp"

#include <algorithm>

namespace ezd::algmod {

using linalg::column_space_basis;
using linalg::hstack;
using linalg::kron;

Module regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> actions;
  for (std::size_t v = 0; v < a->num_variables(); ++v) actions.push_back(a->variable_action(v));
  return Module(a, std::move(actions));
}

Module free_module(const AlgebraPtr& a, std::size_t rank) {
  std::vector<Matrix> actions;
  Matrix id = Matrix::identity(a->field(), rank);
  for (std::size_t v = 0; v < a->num_variables(); ++v) actions.push_back(kron(id, a->variable_action(v)));
  return Module(a, std::move(actions));
}

Module residue_field(const AlgebraPtr& a) {
  return Module(a, std::vector<Matrix>(a->num_variables(), Matrix(a->field(), 1, 1)));
}

Module direct_sum(const Module& m, const Module& n) {
  require_same_algebra(m, n, "direct_sum");
  std::vector<Matrix> actions;
  for (std::size_t v = 0; v < m.actions().size(); ++v) {
    actions.push_back(linalg::direct_sum(m.action(v), n.action(v)));
  }
  return Module(m.algebra(), std::move(actions));
}

Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a) {
  Module out = Module::zero(a);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Module dual_k(const Module& m) {
  std::vector<Matrix> actions;
  for (const auto& x : m.actions()) actions.push_back(x.transpose());
  return Module(m.algebra(), std::move(actions));
}

namespace {

// Restriction to an invariant subspace with independent columns w.
Submodule restrict_to(const Module& m, const Matrix& w) {
  Matrix left = linalg::left_inverse(w);
  std::vector<Matrix> actions;
  for (const auto& x : m.actions()) actions.push_back(left * (x * w));
  Module sub(m.algebra(), std::move(actions));
  return Submodule{sub, Morphism(sub, m, w)};
}

// Quotient by an invariant subspace with independent columns w.
QuotientModule quotient_by(const Module& m, const Matrix& w) {
  Matrix e = linalg::complement_basis(w);
  Matrix t = hstack(w, e);
  auto tinv = linalg::inverse(t);
  if (!tinv) throw Error("quotient: internal basis is singular");
  Matrix p = tinv->block(w.cols(), 0, e.cols(), m.dim());
  std::vector<Matrix> actions;
  for (const auto& x : m.actions()) actions.push_back(p * (x * e));
  Module q(m.algebra(), std::move(actions));
  return QuotientModule{q, Morphism(m, q, p)};
}

Matrix closure(const Module& m, const Matrix& vectors) {
  Matrix s = column_space_basis(vectors);
  while (true) {
    std::vector<Matrix> parts = {s};
    for (const auto& x : m.actions()) parts.push_back(x * s);
    Matrix next = column_space_basis(hstack(parts, m.field(), m.dim()));
    if (next.cols() == s.cols()) return s;
    s = std::move(next);
  }
}

void require_element_of(const Module& m, const Element& x, const char* what) {
  if (!same_algebra(x.algebra(), m.algebra())) throw Error(std::string(what) + ": element of another algebra");
}

}  // namespace

Submodule submodule_generated(const Module& m, const Matrix& vectors) {
  if (vectors.rows() != m.dim()) throw Error("submodule_generated: vector length mismatch");
  return restrict_to(m, closure(m, vectors));
}

QuotientModule quotient_module(const Module& m, const Matrix& vectors) {
  if (vectors.rows() != m.dim()) throw Error("quotient_module: vector length mismatch");
  return quotient_by(m, closure(m, vectors));
}

Submodule annihilator_submodule(const Module& m, const Element& x) {
  require_element_of(m, x, "annihilator_submodule");
  return restrict_to(m, linalg::kernel_basis(m.element_action(x)));
}

QuotientModule scale_quotient(const Module& m, const Element& x) {
  require_element_of(m, x, "scale_quotient");
  return quotient_by(m, column_space_basis(m.element_action(x)));
}

Submodule kernel(const Morphism& f) { return restrict_to(f.source(), linalg::kernel_basis(f.matrix())); }

Submodule image(const Morphism& f) { return restrict_to(f.target(), column_space_basis(f.matrix())); }

QuotientModule cokernel(const Morphism& f) {
  return quotient_by(f.target(), column_space_basis(f.matrix()));
}

Matrix HomSpace::to_matrix(const Matrix& coords) const {
  Matrix flat = flat_basis * coords;
  Matrix f(flat.field(), target_dim, source_dim);
  for (std::size_t a = 0; a < target_dim; ++a) {
    for (std::size_t b = 0; b < source_dim; ++b) f.set(a, b, flat.at(a * source_dim + b, 0));
  }
  return f;
}

namespace {
Matrix flatten(const Matrix& f) {
  Matrix flat(f.field(), f.rows() * f.cols(), 1);
  for (std::size_t a = 0; a < f.rows(); ++a) {
    for (std::size_t b = 0; b < f.cols(); ++b) flat.set(a * f.cols() + b, 0, f.at(a, b));
  }
  return flat;
}
}  // namespace

Matrix HomSpace::coordinates(const Matrix& f) const {
  if (f.rows() != target_dim || f.cols() != source_dim) throw Error("HomSpace: map of the wrong size");
  Matrix flat = flatten(f);
  Matrix c = flat_inverse * flat;
  if (!(flat_basis * c == flat)) throw Error("HomSpace: matrix is not A-linear");
  return c;
}

HomSpace hom_space(const Module& m, const Module& n) {
  require_same_algebra(m, n, "hom");
  const Field& f = m.field();
  const std::size_t sm = m.dim();
  const std::size_t tn = n.dim();
  const std::size_t total = sm * tn;
  HomSpace h{Module::zero(m.algebra()), {}, Matrix(f, total, 0), Matrix(f, 0, total), sm, tn};
  if (total == 0) return h;
  // f X_v = Y_v f, flattened: (I (x) X_v^T - Y_v (x) I) vec(f) = 0; solved one variable at a time
  Matrix k = Matrix::identity(f, total);
  Matrix id_t = Matrix::identity(f, tn);
  Matrix id_s = Matrix::identity(f, sm);
  for (std::size_t v = 0; v < m.actions().size() && k.cols() > 0; ++v) {
    Matrix eq = kron(id_t, m.action(v).transpose()) - kron(n.action(v), id_s);
    k = v == 0 ? linalg::kernel_basis(eq) : k * linalg::kernel_basis(eq * k);
  }
  h.flat_basis = k;
  const std::size_t dim = k.cols();
  if (dim == 0) return h;
  h.flat_inverse = linalg::left_inverse(k);
  for (std::size_t c = 0; c < dim; ++c) {
    Matrix e(f, dim, 1);
    e.set(c, 0, 1);
    h.basis.push_back(h.to_matrix(e));
  }
  std::vector<Matrix> actions;
  for (std::size_t v = 0; v < n.actions().size(); ++v) {
    Matrix act(f, dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      act.set_block(0, c, h.flat_inverse * flatten(n.action(v) * h.basis[c]));
    }
    actions.push_back(std::move(act));
  }
  h.module = Module(m.algebra(), std::move(actions));
  return h;
}

Module hom_module(const Module& m, const Module& n) { return hom_space(m, n).module; }

Matrix TensorSpace::pure(const Matrix& a, const Matrix& b) const { return projection * kron(a, b); }

namespace {

// (M (x)_k N) / relations, where the relations come from `left` acting on M
// and `right` on N for matching variables, and `outer` gives the actions that
// descend to the quotient.
TensorSpace tensor_quotient(const AlgebraPtr& over, std::size_t mdim, std::size_t ndim,
                            const std::vector<Matrix>& left, const std::vector<Matrix>& right,
                            const std::vector<Matrix>& outer, const Field& f) {
  const std::size_t total = mdim * ndim;
  TensorSpace t{Module::zero(over), Matrix(f, 0, total), Matrix(f, total, 0), mdim, ndim};
  if (total == 0) return t;
  Matrix id_m = Matrix::identity(f, mdim);
  Matrix id_n = Matrix::identity(f, ndim);
  std::vector<Matrix> rel;
  for (std::size_t v = 0; v < left.size(); ++v) rel.push_back(kron(left[v], id_n) - kron(id_m, right[v]));
  Matrix w = column_space_basis(hstack(rel, f, total));
  Matrix e = linalg::complement_basis(w);
  auto tinv = linalg::inverse(hstack(w, e));
  if (!tinv) throw Error("tensor: internal basis is singular");
  t.projection = tinv->block(w.cols(), 0, e.cols(), total);
  t.lift = e;
  std::vector<Matrix> actions;
  for (const auto& x : outer) actions.push_back(t.projection * (kron(x, id_n) * e));
  t.module = Module(over, std::move(actions));
  return t;
}

std::vector<std::size_t> variable_map(const Algebra& sub, const Algebra& big) {
  std::vector<std::size_t> idx;
  for (const auto& name : sub.variables()) {
    auto it = std::find(big.variables().begin(), big.variables().end(), name);
    if (it == big.variables().end()) {
      throw Error("variable " + name + " of " + sub.describe() + " is missing from " + big.describe());
    }
    idx.push_back(static_cast<std::size_t>(it - big.variables().begin()));
  }
  if (!(sub.field() == big.field())) throw Error("algebras over different fields");
  return idx;
}

}  // namespace

TensorSpace tensor_space(const Module& m, const Module& n) {
  require_same_algebra(m, n, "tensor");
  return tensor_quotient(m.algebra(), m.dim(), n.dim(), m.actions(), n.actions(), m.actions(),
                         m.field());
}

Module tensor_module(const Module& m, const Module& n) { return tensor_space(m, n).module; }

AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Element& x) {
  if (!same_algebra(x.algebra(), a)) throw Error("quotient_algebra: element of another algebra");
  if (x.is_zero()) throw Error("quotient_algebra: x must be nonzero");
  if (x.is_unit()) throw Error("quotient_algebra: x is a unit");
  const auto& q = a->presentation();
  std::vector<Polynomial> gens = q.ideal_generators;
  gens.push_back(x.polynomial());
  return Algebra::create(presentation::make_presentation(q.field, q.variables, gens, q.order));
}

Module change_algebra(const Module& m, const AlgebraPtr& target) {
  if (target->variables() != m.algebra()->variables() || !(target->field() == m.field())) {
    throw Error("change_algebra: algebras have different variables");
  }
  return Module(target, m.actions());
}

Module restriction(const Module& m, const AlgebraPtr& sub) {
  auto idx = variable_map(*sub, *m.algebra());
  std::vector<Matrix> actions;
  for (auto i : idx) actions.push_back(m.action(i));
  return Module(sub, std::move(actions));
}

Module base_change(const Module& n, const AlgebraPtr& s) {
  const AlgebraPtr& r = n.algebra();
  Module s_reg = regular_module(s);
  Module s_over_r = restriction(s_reg, r);
  return tensor_quotient(s, s->dim(), n.dim(), s_over_r.actions(), n.actions(), s_reg.actions(),
                         n.field())
      .module;
}

Matrix radical_subspace(const Module& m) {
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  return column_space_basis(hstack(m.actions(), m.field(), m.dim()));
}

Matrix minimal_generators(const Module& m) {
  Matrix rad = radical_subspace(m);
  if (rad.cols() == 0) return Matrix::identity(m.field(), m.dim());
  return linalg::complement_basis(rad);
}

std::vector<std::size_t> radical_layers(const Module& m) {
  std::vector<std::size_t> layers;
  Matrix cur = Matrix::identity(m.field(), m.dim());
  while (cur.cols() > 0) {
    Matrix next = column_space_basis(hstack(
        [&] {
          std::vector<Matrix> parts;
          for (const auto& x : m.actions()) parts.push_back(x * cur);
          return parts;
        }(),
        m.field(), m.dim()));
    layers.push_back(cur.cols() - next.cols());
    cur = std::move(next);
  }
  return layers;
}

Matrix socle_subspace(const Module& m) {
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  Matrix stacked = m.action(0);
  for (std::size_t v = 1; v < m.actions().size(); ++v) stacked = linalg::vstack(stacked, m.action(v));
  return linalg::kernel_basis(stacked);
}

std::size_t socle_dim(const Module& m) { return socle_subspace(m).cols(); }

bool is_free(const Module& m) { return num_generators(m) * m.algebra()->dim() == m.dim(); }

}  // namespace ezd::algmod
