#include "ezd/algmod/algebra.hpp"

namespace ezd::algmod {

Element::Element(AlgebraPtr algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim()) throw Error("element: coordinate count mismatch");
}

bool Element::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Element::in_radical() const { return coords_.at(0).is_zero(); }

Polynomial Element::polynomial() const { return algebra_->presentation().from_coordinates(coords_); }

Matrix Element::regular_action() const {
  Matrix m(algebra_->field(), algebra_->dim(), algebra_->dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) m += coords_[i] * algebra_->basis_action(i);
  }
  return m;
}

namespace {
void check_same(const Element& a, const Element& b) {
  if (!same_algebra(a.algebra(), b.algebra())) throw Error("elements of different algebras");
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_same(a, b);
  std::vector<Scalar> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return Element(a.algebra_, std::move(c));
}

Element operator-(const Element& a, const Element& b) {
  check_same(a, b);
  std::vector<Scalar> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return Element(a.algebra_, std::move(c));
}

Element operator*(const Element& a, const Element& b) {
  check_same(a, b);
  Matrix col = a.regular_action() * Matrix::column_vector(b.coords_, a.algebra_->field());
  return Element(a.algebra_, col.column_entries(0));
}

std::string Element::to_string() const { return polynomial().to_string(algebra_->variables()); }

Algebra::Algebra(QuotientPresentation presentation) : presentation_(std::move(presentation)) {}

AlgebraPtr Algebra::create(QuotientPresentation presentation) {
  if (presentation.variables.empty()) throw Error("algebra needs at least one variable");
  if (presentation.dim() == 0) throw NonLocalError("the quotient is the zero ring");
  if (presentation::degree(presentation.staircase.front()) != 0) {
    throw Error("staircase must start with the unit monomial");
  }
  std::shared_ptr<Algebra> a(new Algebra(std::move(presentation)));
  const auto& q = a->presentation_;
  a->table_ = presentation::structure_constants(q);
  const std::size_t d = q.dim();
  for (std::size_t v = 0; v < q.variables.size(); ++v) {
    Monomial m(q.variables.size(), 0);
    m[v] = 1;
    std::size_t idx = q.index_of(m);
    if (idx != static_cast<std::size_t>(-1)) {
      a->variable_actions_.push_back(a->table_[idx]);
    } else {
      // the variable reduces to a combination of other standard monomials
      Element e = a->element(q.variable(v));
      a->variable_actions_.push_back(e.regular_action());
    }
  }
  // local: every variable acts nilpotently
  for (std::size_t v = 0; v < a->variable_actions_.size(); ++v) {
    Matrix p = a->variable_actions_[v];
    for (std::size_t k = 1; k < d && !p.is_zero(); ++k) p = p * a->variable_actions_[v];
    if (!p.is_zero()) {
      throw NonLocalError("algebra " + q.describe() + " is not local: " + q.variables[v] +
                          " is not nilpotent");
    }
  }
  // commutative and associative on every basis triple; table[i]*table[j] is the
  // action of m_i m_j exactly when associativity holds
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (!(a->table_[i].column(j) == a->table_[j].column(i))) {
        throw Error("structure constants are not commutative");
      }
      Element prod(a, a->table_[i].column(j).column_entries(0));
      if (!(a->table_[i] * a->table_[j] == prod.regular_action())) {
        throw Error("structure constants are not associative");
      }
    }
  }
  return a;
}

std::vector<std::size_t> Algebra::radical_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < dim(); ++i) out.push_back(i);
  return out;
}

Element Algebra::element(const Polynomial& p) const {
  return Element(shared_from_this(), presentation_.coordinates(p));
}

Element Algebra::element(const std::vector<Scalar>& coords) const {
  return Element(shared_from_this(), coords);
}

Element Algebra::zero() const {
  return Element(shared_from_this(), std::vector<Scalar>(dim(), Scalar::zero(field())));
}

Element Algebra::one() const {
  std::vector<Scalar> c(dim(), Scalar::zero(field()));
  c[0] = Scalar::one(field());
  return Element(shared_from_this(), c);
}

Element Algebra::variable(std::size_t v) const { return element(presentation_.variable(v)); }

bool Algebra::same_as(const Algebra& other) const {
  const auto& p = presentation_;
  const auto& o = other.presentation_;
  return p.field == o.field && p.variables == o.variables && p.order == o.order &&
         p.groebner == o.groebner;
}

AlgebraPtr make_algebra(const Field& field, std::vector<std::string> variables,
                        std::vector<Polynomial> generators, presentation::MonomialOrder order) {
  return Algebra::create(
      presentation::make_presentation(field, std::move(variables), std::move(generators), order));
}

AlgebraPtr algebra_from_decl(const presentation::RingDecl& decl) {
  std::vector<Polynomial> gens;
  for (const auto& g : decl.generators) {
    gens.push_back(presentation::evaluate_polynomial(g, decl.field, decl.variables, decl.order));
  }
  return make_algebra(decl.field, decl.variables, std::move(gens), decl.order);
}

AlgebraPtr parse_algebra(std::string_view text) {
  auto script = presentation::parse_script("ring R = " + std::string(text) + ";");
  if (script.statements.size() != 1) throw Error("expected a single ring");
  return algebra_from_decl(std::get<presentation::RingDecl>(script.statements.front()));
}

}  // namespace ezd::algmod
