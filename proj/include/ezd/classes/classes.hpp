#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ezd/homology/derived.hpp"

namespace ezd::classes {

using algmod::Element;
using algmod::Module;
using algmod::Morphism;
using homology::DimTable;
using linalg::Matrix;

struct EzdReport {
  bool holds = false;
  bool x_nonzero_action = false;  // xM != 0
  bool x_not_surjective = false;  // xM != M
  bool ker_x_eq_im_y = false;
  bool ker_y_eq_im_x = false;

  /// Name of the first failing check, empty when the pair is exact.
  std::string failing_check() const;
};

/// Decided exactly from ranks of the multiplication matrices.
EzdReport is_ezd_pair(const Element& x, const Element& y, const Module& m);

struct Verdict {
  enum class Kind { HoldsUpTo, CertifiedAll, Fails, Undetermined };
  Kind kind = Kind::Undetermined;
  int bound = 0;
  std::string witness;  // for Fails: the failing map or table and degree; for Undetermined: why

  bool holds() const { return kind == Kind::HoldsUpTo || kind == Kind::CertifiedAll; }
  bool fails() const { return kind == Kind::Fails; }
  std::string to_string() const;
};

const char* kind_name(Verdict::Kind k);

struct NamedTable {
  std::string name;  // e.g. "Ext(X,C)"
  bool is_ext = true;
  DimTable table;
};

struct MembershipReport {
  std::string class_name;  // "G_C", "A_C", "B_C", "semidualizing"
  Verdict verdict;
  std::string natural_map;  // "chi", "delta", "gamma", "xi"
  bool natural_map_iso = false;
  std::optional<Morphism> natural_map_witness;
  std::vector<NamedTable> tables;

  bool holds() const { return verdict.holds(); }
};

/// chi: A -> Hom(C, C), a -> multiplication by a.
Morphism homothety_map(const Module& c);
/// delta: X -> Hom(Hom(X, C), C), x -> evaluation at x.
Morphism biduality_map(const Module& x, const Module& c);
/// gamma: M -> Hom(C, C (x) M), m -> (c -> c (x) m).
Morphism gamma_map(const Module& m, const Module& c);
/// xi: C (x) Hom(C, M) -> M, c (x) f -> f(c).
Morphism xi_map(const Module& m, const Module& c);

struct Options {
  int bound = homology::kDefaultBound;
  homology::DerivedOptions derived;
};

/// A verified semidualizing module: holds() is required before the class
/// predicates below accept it.
struct Semidualizing {
  Module module;
  MembershipReport report;

  bool holds() const { return report.holds(); }
};

Semidualizing is_semidualizing(const Module& c, const Options& opt = {});

/// Class predicates. The Semidualizing argument must hold; an ezd::Error is
/// thrown otherwise. Membership stops at the first failing condition: the
/// vanishing tables in order, then the natural map. The natural map is always
/// built and its invertibility recorded.
MembershipReport in_G_C(const Module& x, const Semidualizing& c, const Options& opt = {});
MembershipReport in_A_C(const Module& m, const Semidualizing& c, const Options& opt = {});
MembershipReport in_B_C(const Module& m, const Semidualizing& c, const Options& opt = {});

/// Post-composition with f: Hom(T, X) -> Hom(T, Y) in the given bases.
Matrix hom_post(const algmod::HomSpace& from, const algmod::HomSpace& to, const Matrix& f);

}  // namespace ezd::classes
