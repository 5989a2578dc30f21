#include "ezd/presentation/polynomial.hpp"

#include <algorithm>
#include <map>

namespace ezd::presentation {

std::string order_name(MonomialOrder order) {
  return order == MonomialOrder::Lex ? "lex" : "degrevlex";
}

std::uint32_t degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
  auto da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.at(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

Polynomial::Polynomial(const Field& field, std::size_t nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(order) {}

Polynomial Polynomial::constant(const Field& field, std::size_t nvars, MonomialOrder order,
                                const Scalar& c) {
  Polynomial p(field, nvars, order);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars, 0)});
  return p;
}

Polynomial Polynomial::variable(const Field& field, std::size_t nvars, MonomialOrder order,
                                std::size_t index) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return monomial(field, order, Scalar::one(field), m);
}

Polynomial Polynomial::monomial(const Field& field, MonomialOrder order, const Scalar& c,
                                const Monomial& m) {
  Polynomial p(field, m.size(), order);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return monomial_greater(a.exponents, b.exponents, order_);
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(field_ == other.field_) || nvars_ != other.nvars_) {
    throw Error("polynomial ring mismatch");
  }
  // merge of two descending sequences
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() &&
         monomial_greater(terms_[i].exponents, other.terms_[j].exponents, order_))) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               monomial_greater(other.terms_[j].exponents, terms_[i].exponents, order_)) {
      out.push_back(other.terms_[j++]);
    } else {
      Scalar c = terms_[i].coeff + other.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({c, terms_[i].exponents});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.field_, a.nvars_, a.order_);
  for (const auto& t : a.terms_) {
    for (const auto& u : b.terms_) r.terms_.push_back({t.coeff * u.coeff, mul(t.exponents, u.exponents)});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial r(field_, nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves any monomial order
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, mul(t.exponents, m)});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times_term(c, Monomial(nvars_, 0));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(field_, nvars_, order_, Scalar::one(field_));
  for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse());
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  Polynomial r = *this;
  r.order_ = order;
  r.normalize();
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  const bool rational = field_.is_rational();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Scalar c = t.coeff;
    bool negative = false;
    if (rational && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    bool is_unit_monomial = degree(t.exponents) == 0;
    if (c.is_one() && !is_unit_monomial) {
      s += monomial_string(t.exponents, vars);
    } else if (is_unit_monomial) {
      s += c.to_string();
    } else {
      s += c.to_string() + "*" + monomial_string(t.exponents, vars);
    }
  }
  return s;
}

}  // namespace ezd::presentation
