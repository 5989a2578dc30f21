#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ezd/linalg/scalar.hpp"

namespace ezd::linalg {

/// Dense exact matrix, row-major. Prime-field entries are stored as raw
/// residues and rational entries as cpp_rational; all algorithms dispatch on
/// the storage so prime-field elimination never touches Scalar objects.
class Matrix {
 public:
  Matrix() : Matrix(kDefaultField, 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Row-major integer entries; throws ezd::Error on a size mismatch.
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          std::initializer_list<long long> entries);
  static Matrix from_ints(const Field& field, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& entries);
  /// A single column.
  static Matrix column_vector(const std::vector<Scalar>& entries, const Field& field);
  static Matrix random(const Field& field, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long long value);
  /// entry(r, c) += value
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& indices) const;
  Matrix rows_subset(const std::vector<std::size_t>& indices) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  std::vector<Scalar> column_entries(std::size_t c) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  template <class Fn>
  friend decltype(auto) dispatch(const Matrix& m, Fn&& fn);
  template <class Fn>
  friend decltype(auto) dispatch_mut(Matrix& m, Fn&& fn);

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<Rational>> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, const Field& field, std::size_t rows);
/// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Kronecker product; index (i*rows(b)+k, j*cols(b)+l) = a(i,j)*b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the null space.
Matrix kernel_basis(const Matrix& m);
/// Some x with a*x = b, absent exactly when b is outside the column space.
/// Throws ezd::Error when rows(a) != rows(b).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Independent columns of m spanning its column space (the pivot columns).
Matrix column_space_basis(const Matrix& m);
/// Standard basis columns E such that [basis | E] is invertible; `basis`
/// must have independent columns.
Matrix complement_basis(const Matrix& basis);
/// For a matrix with independent columns, a matrix L with L * basis = I.
Matrix left_inverse(const Matrix& basis);
/// Basis of the intersection of two column spaces (same ambient dimension).
Matrix intersection_basis(const Matrix& a, const Matrix& b);
/// Whether span(a) is contained in span(b).
bool span_contains(const Matrix& b, const Matrix& a);

}  // namespace ezd::linalg
