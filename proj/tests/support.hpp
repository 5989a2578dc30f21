#pragma once

#include <string>

#include "ezd/algmod/constructions.hpp"

namespace testsupport {

using ezd::algmod::AlgebraPtr;
using ezd::algmod::Element;
using ezd::algmod::Module;

inline AlgebraPtr ring(const std::string& text) { return ezd::algmod::parse_algebra(text); }

inline Element elt(const AlgebraPtr& a, const std::string& poly) {
  std::string vars;
  for (std::size_t i = 0; i < a->variables().size(); ++i) vars += (i ? "," : "") + a->variables()[i];
  auto script = ezd::presentation::parse_script("ring T = " + a->field().name() + "[" + vars + "] / (" +
                                                poly + ");");
  const auto& decl = std::get<ezd::presentation::RingDecl>(script.statements[0]);
  return a->element(ezd::presentation::evaluate_polynomial(decl.generators[0], a->field(),
                                                           a->variables(), a->presentation().order));
}

/// Independent exactness oracle: ranks of the multiplication matrices.
inline bool exact_pair_oracle(const Element& x, const Element& y, const Module& m) {
  auto mx = m.element_action(x);
  auto my = m.element_action(y);
  const std::size_t rx = ezd::linalg::rank(mx), ry = ezd::linalg::rank(my);
  if (rx == 0 || rx == m.dim()) return false;
  return (mx * my).is_zero() && (my * mx).is_zero() && m.dim() - rx == ry && m.dim() - ry == rx;
}

}  // namespace testsupport
