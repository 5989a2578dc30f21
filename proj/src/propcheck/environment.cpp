#include "ezd/propcheck/environment.hpp"

namespace ezd::propcheck {

using presentation::evaluate_polynomial;
using Kind = Expr::Kind;

namespace {

std::string where(const Expr& e) {
  return "line " + std::to_string(e.pos.line) + ", column " + std::to_string(e.pos.column) + ": ";
}

[[noreturn]] void fail(const Expr& e, const std::string& what) { throw Error(where(e) + what); }

void arity(const Expr& e, std::size_t lo, std::size_t hi) {
  if (e.children.size() < lo || e.children.size() > hi) {
    fail(e, e.name + " expects " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) +
                " arguments");
  }
}

}  // namespace

void Environment::load(const Script& script) {
  for (const auto& st : script.statements) {
    if (const auto* r = std::get_if<presentation::RingDecl>(&st)) {
      rings_.insert_or_assign(r->name, algmod::algebra_from_decl(*r));
      ring_order_.push_back(r->name);
    } else if (const auto* m = std::get_if<presentation::ModuleDecl>(&st)) {
      modules_.insert_or_assign(m->name, eval_module(m->expr));
    } else if (const auto* e = std::get_if<presentation::ElementDecl>(&st)) {
      elements_.insert_or_assign(e->name, eval_element(e->expr, ring(e->ring)));
    } else {
      checks_.push_back(std::get<CheckStmt>(st));
    }
  }
}

AlgebraPtr Environment::ring(const std::string& name) const {
  auto it = rings_.find(name);
  if (it == rings_.end()) throw Error("undefined ring '" + name + "'");
  return it->second;
}

const Module& Environment::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it == modules_.end()) throw Error("undefined module '" + name + "'");
  return it->second;
}

const Element& Environment::element(const std::string& name) const {
  auto it = elements_.find(name);
  if (it == elements_.end()) throw Error("undefined element '" + name + "'");
  return it->second;
}

long long Environment::eval_int(const Expr& e) const {
  if (e.kind == Kind::Number) return e.number;
  if (e.kind == Kind::Neg && e.children.size() == 1 && e.children[0].kind == Kind::Number) return -e.children[0].number;
  fail(e, "expected an integer");
}

Element Environment::eval_element(const Expr& e, const AlgebraPtr& a) const {
  if (e.kind == Kind::Ident && has_element(e.name)) {
    const Element& el = element(e.name);
    if (!algmod::same_algebra(el.algebra(), a)) fail(e, "element '" + e.name + "' belongs to another ring");
    return el;
  }
  try {
    return a->element(evaluate_polynomial(e, a->field(), a->variables(), a->presentation().order));
  } catch (const Error& err) {
    fail(e, err.what());
  }
}

Module Environment::eval_module(const Expr& e) const {
  if (e.kind == Kind::Ident) {
    if (has_module(e.name)) return module(e.name);
    if (has_ring(e.name)) return algmod::regular_module(ring(e.name));
    fail(e, "undefined module '" + e.name + "'");
  }
  if (e.kind != Kind::Call) fail(e, "expected a module expression");
  const auto& a = e.children;
  auto ring_arg = [&](const Expr& x) {
    if (x.kind != Kind::Ident || !has_ring(x.name)) fail(x, "expected a ring name");
    return ring(x.name);
  };
  const std::string& f = e.name;
  if (f == "free") {
    arity(e, 2, 2);
    long long n = eval_int(a[1]);
    if (n < 0) fail(a[1], "negative rank");
    return algmod::free_module(ring_arg(a[0]), static_cast<std::size_t>(n));
  }
  if (f == "omega") {
    arity(e, 1, 1);
    return algmod::dual_k(algmod::regular_module(ring_arg(a[0])));
  }
  if (f == "residue") {
    arity(e, 1, 1);
    return algmod::residue_field(ring_arg(a[0]));
  }
  if (f == "dualk") {
    arity(e, 1, 1);
    return algmod::dual_k(eval_module(a[0]));
  }
  if (f == "hom" || f == "tensor") {
    arity(e, 2, 2);
    Module m = eval_module(a[0]), n = eval_module(a[1]);
    return f == "hom" ? algmod::hom_module(m, n) : algmod::tensor_module(m, n);
  }
  if (f == "ann" || f == "modx") {
    arity(e, 2, 2);
    Module m = eval_module(a[0]);
    Element x = eval_element(a[1], m.algebra());
    return f == "ann" ? algmod::annihilator_submodule(m, x).module : algmod::scale_quotient(m, x).module;
  }
  if (f == "sum") {
    arity(e, 1, 64);
    std::vector<Module> parts;
    for (const auto& c : a) parts.push_back(eval_module(c));
    return algmod::direct_sum(parts, parts[0].algebra());
  }
  if (f == "basechange") {
    arity(e, 2, 2);
    return algmod::base_change(eval_module(a[0]), ring_arg(a[1]));
  }
  if (f == "quot") {
    // quot(F, v1, v2, ...): F = free(R, n) or a ring name; each v is an
    // n-tuple (or a bare polynomial when n = 1) naming an element of F
    arity(e, 1, 256);
    AlgebraPtr r;
    std::size_t n = 0;
    if (a[0].kind == Kind::Ident && has_ring(a[0].name)) {
      r = ring(a[0].name);
      n = 1;
    } else if (a[0].kind == Kind::Call && a[0].name == "free") {
      arity(a[0], 2, 2);
      r = ring_arg(a[0].children[0]);
      n = static_cast<std::size_t>(eval_int(a[0].children[1]));
    } else {
      fail(a[0], "quot expects free(R, n) or a ring name");
    }
    Module fm = algmod::free_module(r, n);
    const std::size_t d = r->dim();
    Matrix vecs(r->field(), fm.dim(), a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) {
      std::vector<const Expr*> entries;
      if (a[k].kind == Kind::Tuple) {
        for (const auto& c : a[k].children) entries.push_back(&c);
      } else {
        entries.push_back(&a[k]);
      }
      if (entries.size() != n) fail(a[k], "expected a tuple of length " + std::to_string(n));
      for (std::size_t j = 0; j < n; ++j) {
        Element el = eval_element(*entries[j], r);
        for (std::size_t t = 0; t < d; ++t) vecs.set(j * d + t, k - 1, el.coords()[t]);
      }
    }
    return algmod::quotient_module(fm, vecs).module;
  }
  fail(e, "unknown constructor '" + f + "'");
}

}  // namespace ezd::propcheck
