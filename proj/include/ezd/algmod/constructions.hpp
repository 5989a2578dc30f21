#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ezd/algmod/module.hpp"

namespace ezd::algmod {

Module regular_module(const AlgebraPtr& a);
Module free_module(const AlgebraPtr& a, std::size_t rank);
/// The residue field k = A/rad A.
Module residue_field(const AlgebraPtr& a);
Module direct_sum(const Module& m, const Module& n);
Module direct_sum(const std::vector<Module>& parts, const AlgebraPtr& a);
/// Hom_k(M, k) with transposed actions.
Module dual_k(const Module& m);

struct Submodule {
  Module module;
  Morphism inclusion;
};

struct QuotientModule {
  Module module;
  Morphism projection;
};

/// Smallest submodule containing the given columns.
Submodule submodule_generated(const Module& m, const Matrix& vectors);
/// M modulo the submodule generated by the given columns.
QuotientModule quotient_module(const Module& m, const Matrix& vectors);
/// (0 :_M x)
Submodule annihilator_submodule(const Module& m, const Element& x);
/// M/xM
QuotientModule scale_quotient(const Module& m, const Element& x);
Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
QuotientModule cokernel(const Morphism& f);

/// Hom_A(M, N) with a k-basis of action-commuting matrices. A basis map f
/// (dim N x dim M) is flattened row-major: entry (a, b) sits at a*dim M + b.
struct HomSpace {
  Module module;
  std::vector<Matrix> basis;
  Matrix flat_basis;    // (dim N * dim M) x h
  Matrix flat_inverse;  // h x (dim N * dim M), flat_inverse * flat_basis = I
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;

  /// The map with the given coordinates (a column).
  Matrix to_matrix(const Matrix& coords) const;
  /// Coordinates of an A-linear map; throws if f is not in the span.
  Matrix coordinates(const Matrix& f) const;
};

HomSpace hom_space(const Module& m, const Module& n);
Module hom_module(const Module& m, const Module& n);

/// M (x)_A N as a quotient of the k-tensor space. The pure tensor e_i (x) e_j
/// sits at index i*dim N + j of the k-tensor space.
struct TensorSpace {
  Module module;
  Matrix projection;  // dim T x (dim M * dim N)
  Matrix lift;        // (dim M * dim N) x dim T, projection * lift = I
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  /// Coordinates of a (x) b for column vectors a in M and b in N.
  Matrix pure(const Matrix& a, const Matrix& b) const;
};

TensorSpace tensor_space(const Module& m, const Module& n);
Module tensor_module(const Module& m, const Module& n);

/// A/xA, keeping the variables; x must be a nonzero element of the radical.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Element& x);
/// The same actions read over another algebra with the same variable names.
/// Used to pass between A and A/xA in both directions; the relations of the
/// target are checked.
Module change_algebra(const Module& m, const AlgebraPtr& target);
/// M viewed over a subalgebra whose variables are a subset of M's variables.
Module restriction(const Module& m, const AlgebraPtr& sub);
/// S (x)_R N for N over R, where R's variables are among S's.
Module base_change(const Module& n, const AlgebraPtr& s);

/// Columns spanning rad(M) = sum of images of the variable actions.
Matrix radical_subspace(const Module& m);
/// Complement of rad(M): a minimal generating set, as columns.
Matrix minimal_generators(const Module& m);
/// dim rad^i M / rad^{i+1} M for i = 0, 1, ... until the layers vanish.
std::vector<std::size_t> radical_layers(const Module& m);
/// Columns spanning (0 :_M rad A).
Matrix socle_subspace(const Module& m);
std::size_t socle_dim(const Module& m);
inline std::size_t num_generators(const Module& m) { return m.dim() - linalg::rank(radical_subspace(m)); }

/// Whether m is isomorphic to a free module (number of generators times dim A = dim M).
bool is_free(const Module& m);

}  // namespace ezd::algmod
