#pragma once

#include <map>
#include <string>
#include <vector>

#include "ezd/algmod/constructions.hpp"
#include "ezd/presentation/script.hpp"

namespace ezd::propcheck {

using algmod::AlgebraPtr;
using algmod::Element;
using algmod::Module;
using linalg::Matrix;
using presentation::CheckStmt;
using presentation::Expr;
using presentation::Script;

/// Named rings, modules and elements built from the declarations of a script.
class Environment {
 public:
  /// Evaluates every declaration in order; check statements are collected.
  void load(const Script& script);

  AlgebraPtr ring(const std::string& name) const;
  const Module& module(const std::string& name) const;
  const Element& element(const std::string& name) const;
  bool has_ring(const std::string& name) const { return rings_.count(name) != 0; }
  bool has_module(const std::string& name) const { return modules_.count(name) != 0; }
  bool has_element(const std::string& name) const { return elements_.count(name) != 0; }

  /// Module expressions; a bare ring name is its regular module.
  Module eval_module(const Expr& e) const;
  /// Element names, or polynomials in the variables of a.
  Element eval_element(const Expr& e, const AlgebraPtr& a) const;
  long long eval_int(const Expr& e) const;

  const std::vector<CheckStmt>& checks() const { return checks_; }
  /// Ring names in declaration order.
  const std::vector<std::string>& ring_names() const { return ring_order_; }

 private:
  std::map<std::string, AlgebraPtr> rings_;
  std::map<std::string, Module> modules_;
  std::map<std::string, Element> elements_;
  std::vector<CheckStmt> checks_;
  std::vector<std::string> ring_order_;
};

}  // namespace ezd::propcheck
