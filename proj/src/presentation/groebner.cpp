#include "ezd/presentation/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ezd::presentation {

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial rest = p;
  Polynomial remainder(p.field(), p.nvars(), p.order());
  std::vector<Term> kept;
  while (!rest.is_zero()) {
    const Term lead = rest.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.leading().exponents, lead.exponents)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Scalar c = lead.coeff / divisor->leading().coeff;
      rest -= divisor->times_term(c, quotient(lead.exponents, divisor->leading().exponents));
    } else {
      kept.push_back(lead);
      rest -= Polynomial::monomial(p.field(), p.order(), lead.coeff, lead.exponents);
    }
  }
  for (const auto& t : kept) remainder += Polynomial::monomial(p.field(), p.order(), t.coeff, t.exponents);
  return remainder;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading().exponents, g.leading().exponents);
  Polynomial a = f.times_term(f.leading().coeff.inverse(), quotient(l, f.leading().exponents));
  Polynomial b = g.times_term(g.leading().coeff.inverse(), quotient(l, g.leading().exponents));
  return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       std::size_t pair_budget) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(g, basis).monic();
    if (!r.is_zero()) basis.push_back(r);
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].leading().exponents, basis[j].leading().exponents)) continue;
    if (++processed > pair_budget) {
      throw BudgetExceededError("Groebner basis: S-pair budget of " + std::to_string(pair_budget) +
                                " exceeded");
    }
    Polynomial h = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // minimal: drop elements whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading().exponents;
      const auto& lj = basis[j].leading().exponents;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduced: tails in normal form with respect to the others
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term& lead = minimal[i].leading();
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].field(), minimal[i].order(),
                                                        lead.coeff, lead.exponents);
    reduced.push_back(Polynomial::monomial(minimal[i].field(), minimal[i].order(), lead.coeff,
                                           lead.exponents) +
                      normal_form(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return monomial_greater(b.leading().exponents, a.leading().exponents, a.order());
  });
  return reduced;
}

std::vector<Monomial> quotient_basis(const std::vector<Polynomial>& groebner, std::size_t nvars,
                                     MonomialOrder order) {
  std::vector<Monomial> leads;
  for (const auto& g : groebner) leads.push_back(g.leading().exponents);
  std::vector<std::uint32_t> bounds(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& l : leads) {
      bool pure = l[v] > 0;
      for (std::size_t w = 0; w < nvars && pure; ++w) {
        if (w != v && l[w] != 0) pure = false;
      }
      if (pure && (bounds[v] == 0 || l[v] < bounds[v])) bounds[v] = l[v];
    }
    bool has_unit = std::any_of(leads.begin(), leads.end(),
                                [](const Monomial& l) { return degree(l) == 0; });
    if (bounds[v] == 0 && !has_unit) {
      throw InfiniteDimensionalError("quotient is infinite-dimensional: variable #" +
                                     std::to_string(v + 1) +
                                     " has no pure power among the leading monomials");
    }
    if (bounds[v] == 0) bounds[v] = 1;
  }
  std::vector<Monomial> staircase;
  Monomial m(nvars, 0);
  while (true) {
    bool standard = std::none_of(leads.begin(), leads.end(),
                                 [&](const Monomial& l) { return divides(l, m); });
    if (standard) staircase.push_back(m);
    std::size_t v = 0;
    while (v < nvars) {
      if (++m[v] < bounds[v]) break;
      m[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(staircase.begin(), staircase.end(), [&](const Monomial& a, const Monomial& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return monomial_greater(a, b, order);
  });
  return staircase;
}

std::size_t QuotientPresentation::index_of(const Monomial& m) const {
  auto it = std::lower_bound(staircase.begin(), staircase.end(), m,
                             [&](const Monomial& a, const Monomial& b) {
                               if (degree(a) != degree(b)) return degree(a) < degree(b);
                               return monomial_greater(a, b, order);
                             });
  if (it == staircase.end() || *it != m) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - staircase.begin());
}

std::vector<Scalar> QuotientPresentation::coordinates(const Polynomial& p) const {
  std::vector<Scalar> coords(dim(), Scalar::zero(field));
  const Polynomial nf = normal_form(p, groebner);
  for (const auto& t : nf.terms()) {
    std::size_t i = index_of(t.exponents);
    if (i == static_cast<std::size_t>(-1)) throw Error("normal form left the staircase");
    coords[i] = t.coeff;
  }
  return coords;
}

Polynomial QuotientPresentation::from_coordinates(const std::vector<Scalar>& coords) const {
  Polynomial p = zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    p += Polynomial::monomial(field, order, coords[i], staircase[i]);
  }
  return p;
}

Polynomial QuotientPresentation::zero() const {
  return Polynomial(field, variables.size(), order);
}

Polynomial QuotientPresentation::variable(std::size_t i) const {
  return Polynomial::variable(field, variables.size(), order, i);
}

std::string QuotientPresentation::describe() const {
  std::ostringstream os;
  os << field.name() << "[";
  for (std::size_t i = 0; i < variables.size(); ++i) os << (i ? "," : "") << variables[i];
  os << "]/(";
  for (std::size_t i = 0; i < ideal_generators.size(); ++i) {
    os << (i ? ", " : "") << ideal_generators[i].to_string(variables);
  }
  os << ")";
  return os.str();
}

QuotientPresentation make_presentation(const Field& field, std::vector<std::string> variables,
                                       std::vector<Polynomial> generators, MonomialOrder order,
                                       std::size_t pair_budget) {
  QuotientPresentation q;
  q.field = field;
  q.variables = std::move(variables);
  q.order = order;
  for (auto& g : generators) {
    if (!(g.field() == field) || g.nvars() != q.variables.size()) {
      throw Error("ideal generator does not belong to the ambient polynomial ring");
    }
    g = g.with_order(order);
  }
  q.ideal_generators = std::move(generators);
  q.groebner = groebner_basis(q.ideal_generators, pair_budget);
  q.staircase = quotient_basis(q.groebner, q.variables.size(), order);
  return q;
}

std::vector<linalg::Matrix> structure_constants(const QuotientPresentation& q) {
  const std::size_t d = q.dim();
  std::vector<linalg::Matrix> table;
  table.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    linalg::Matrix m(q.field, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Monomial prod = mul(q.staircase[i], q.staircase[j]);
      auto coords = q.coordinates(Polynomial::monomial(q.field, q.order, Scalar::one(q.field), prod));
      for (std::size_t k = 0; k < d; ++k) {
        if (!coords[k].is_zero()) m.set(k, j, coords[k]);
      }
    }
    table.push_back(std::move(m));
  }
  return table;
}

}  // namespace ezd::presentation
