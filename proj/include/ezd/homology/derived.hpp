#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ezd/homology/resolution.hpp"

namespace ezd::homology {

/// Omega^i isomorphic to Omega^j of the resolved module, 1 <= i < j.
struct Periodicity {
  std::size_t i = 0;
  std::size_t j = 0;
  Morphism witness;
};

/// Finds the first pair (by j, then i) of isomorphic syzygies within the
/// computed part of the resolution, looking at Omega^1 .. Omega^window.
std::optional<Periodicity> syzygy_periodicity(const FreeResolution& res, std::size_t window,
                                              std::uint64_t seed = 1);
std::optional<Periodicity> syzygy_periodicity(const Module& m, std::size_t window,
                                              std::size_t budget = kDefaultBettiBudget);

/// How a derived functor table was obtained.
///  Ext: First = projective resolution of M; Second = injective side, computed
///       as Ext^i(N^v, M^v) from a resolution of the k-dual of N.
///  Tor: First = resolve M; Second = resolve N.
///  Trivial = a free (or, for Ext, injective) argument.
enum class Route { Trivial, First, Second };

const char* route_name(bool is_ext, Route r);

struct DimTable {
  std::vector<std::size_t> dims;  // dims[i] for the degrees actually computed
  int bound = 0;
  Route route = Route::First;
  bool budget_exceeded = false;
  /// The resolved module has finite projective dimension (or the route is trivial).
  bool terminated = false;
  std::optional<Periodicity> period;

  bool complete() const { return dims.size() == static_cast<std::size_t>(bound) + 1; }
  /// First degree >= from with a nonzero entry, among computed degrees.
  std::optional<std::size_t> first_nonzero(std::size_t from = 1) const;
  /// Zero in every computed degree >= 1 and nothing missing up to the bound.
  bool vanishes_up_to_bound() const { return complete() && !first_nonzero(1); }
  /// Vanishing extends to every degree >= 1: trivial route, finite
  /// resolution, or a periodicity witness whose period is covered by the bound.
  bool vanishing_certified() const;
};

struct DerivedOptions {
  std::size_t budget = kDefaultBettiBudget;
  std::uint64_t seed = 1;
  /// Look for periodicity witnesses when the table vanishes.
  bool certify = true;
};

DimTable ext(const Module& m, const Module& n, int bound, const DerivedOptions& opt = {});
DimTable tor(const Module& m, const Module& n, int bound, const DerivedOptions& opt = {});
/// A fixed route (Trivial is not accepted); used by cross-checks.
DimTable ext_via(const Module& m, const Module& n, int bound, Route route, const DerivedOptions& opt = {});
DimTable tor_via(const Module& m, const Module& n, int bound, Route route, const DerivedOptions& opt = {});

/// Cohomology dims of Hom(F, n) for a given resolution F, degrees 0..bound.
std::vector<std::size_t> ext_from_resolution(const FreeResolution& f, const Module& n, int bound);
/// Homology dims of F (x) n, degrees 0..bound.
std::vector<std::size_t> tor_from_resolution(const FreeResolution& f, const Module& n, int bound);

/// Bounded homological dimension: -inf for the zero module, an exact value
/// when the resolution terminates within the bound, otherwise a lower bound.
struct DimValue {
  enum class Kind { NegInf, Exactly, AtLeast };
  Kind kind = Kind::NegInf;
  int value = 0;
  /// Set when the value comes from the depth-zero collapse (over an artinian
  /// local algebra a module of finite projective dimension is free) rather
  /// than from a finished resolution.
  bool collapsed = false;

  static DimValue neg_inf() { return {Kind::NegInf, 0, false}; }
  static DimValue exactly(int n) { return {Kind::Exactly, n, false}; }
  static DimValue at_least(int n) { return {Kind::AtLeast, n, false}; }
  bool is_exact(int n) const { return kind == Kind::Exactly && value == n; }
  std::string to_string() const;
  friend bool operator==(const DimValue& a, const DimValue& b) { return a.kind == b.kind && a.value == b.value; }
};

/// Whether a <= b holds for every pair of true values compatible with the verdicts.
bool certainly_le(const DimValue& a, const DimValue& b);
/// Whether a <= b holds for some pair of compatible true values.
bool possibly_le(const DimValue& a, const DimValue& b);

/// Steps of the resolution computed by pd_bounded before the collapse decides.
inline constexpr int kCollapseDepth = 4;

DimValue pd_bounded(const Module& m, int bound, std::size_t budget = kDefaultBettiBudget);
/// pd of the k-dual.
DimValue id_bounded(const Module& m, int bound, std::size_t budget = kDefaultBettiBudget);

/// Monomial actions m_t on a module for every staircase monomial.
std::vector<Matrix> staircase_actions(const Module& m);

}  // namespace ezd::homology
