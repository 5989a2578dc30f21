#include "ezd/linalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "modp.hpp"

namespace ezd::linalg {

namespace {

struct PrimeOps {
  std::uint32_t p;
  using T = std::uint32_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return detail::addmod(a, b, p); }
  T sub(T a, T b) const { return detail::submod(a, b, p); }
  T mul(T a, T b) const { return detail::mulmod(a, b, p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const { return detail::invmod(a, p); }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(const Field& f, T a) const { return Scalar::from_residue(f, a); }
  // a - f*b, the elimination kernel
  T sub_mul(T a, T f, T b) const {
    return detail::submod(a, detail::mulmod(f, b, p), p);
  }
};

struct RationalOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return T(1) / a; }
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Field& f, const T& a) const { return Scalar(f, a); }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
};

void check_fields(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw Error("matrix field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}

/// In-place reduced row echelon form; returns pivot columns.
template <class Ops, class T>
std::vector<std::size_t> rref_in_place(const Ops& ops, std::vector<T>& a, std::size_t rows,
                                        std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ops.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    }
    T inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ops.is_zero(a[i * cols + c])) continue;
      T f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) {
        if (ops.is_zero(a[r * cols + j])) continue;
        a[i * cols + j] = ops.sub_mul(a[i * cols + j], f, a[r * cols + j]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

template <class Fn>
decltype(auto) dispatch(const Matrix& m, Fn&& fn) {
  if (m.field_.is_prime_field()) {
    return fn(PrimeOps{m.field_.characteristic()}, std::get<0>(m.data_));
  }
  return fn(RationalOps{}, std::get<1>(m.data_));
}

template <class Fn>
decltype(auto) dispatch_mut(Matrix& m, Fn&& fn) {
  if (m.field_.is_prime_field()) {
    return fn(PrimeOps{m.field_.characteristic()}, std::get<0>(m.data_));
  }
  return fn(RationalOps{}, std::get<1>(m.data_));
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field.is_prime_field()) {
    data_ = std::vector<std::uint32_t>(rows * cols, 0);
  } else {
    data_ = std::vector<Rational>(rows * cols, Rational(0));
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> entries) {
  return from_ints(field, rows, cols, std::vector<long long>(entries));
}

Matrix Matrix::from_ints(const Field& field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw Error("from_ints: entry count mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& entries, const Field& field) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Matrix Matrix::random(const Field& field, std::size_t rows, std::size_t cols,
                      std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(field, rng));
  }
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  return dispatch(*this, [&](const auto& ops, const auto& v) {
    return ops.to(field_, v[r * cols_ + c]);
  });
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (!(value.field() == field_)) throw Error("Matrix::set: field mismatch");
  dispatch_mut(*this, [&](const auto& ops, auto& v) { v[r * cols_ + c] = ops.from(value); });
}

void Matrix::set(std::size_t r, std::size_t c, long long value) {
  set(r, c, Scalar(field_, value));
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& value) {
  if (!(value.field() == field_)) throw Error("Matrix::add_to: field mismatch");
  dispatch_mut(*this, [&](const auto& ops, auto& v) {
    v[r * cols_ + c] = ops.add(v[r * cols_ + c], ops.from(value));
  });
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  return dispatch(*this, [&](const auto& ops, const auto& v) {
    return ops.is_zero(v[r * cols_ + c]);
  });
}

bool Matrix::is_zero() const {
  return dispatch(*this, [&](const auto& ops, const auto& v) {
    for (const auto& x : v) {
      if (!ops.is_zero(x)) return false;
    }
    return true;
  });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  dispatch(*this, [&](const auto&, const auto& v) {
    auto& out = std::get<std::decay_t<decltype(v)>>(t.data_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = v[i * cols_ + j];
    }
  });
  return t;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::columns(const std::vector<std::size_t>& indices) const {
  Matrix out(field_, rows_, indices.size());
  dispatch(*this, [&](const auto&, const auto& v) {
    auto& o = std::get<std::decay_t<decltype(v)>>(out.data_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < indices.size(); ++k) {
        o[i * indices.size() + k] = v[i * cols_ + indices[k]];
      }
    }
  });
  return out;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& indices) const {
  Matrix out(field_, indices.size(), cols_);
  dispatch(*this, [&](const auto&, const auto& v) {
    auto& o = std::get<std::decay_t<decltype(v)>>(out.data_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      for (std::size_t j = 0; j < cols_; ++j) o[k * cols_ + j] = v[indices[k] * cols_ + j];
    }
  });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("Matrix::block out of range");
  Matrix out(field_, nr, nc);
  dispatch(*this, [&](const auto&, const auto& v) {
    auto& o = std::get<std::decay_t<decltype(v)>>(out.data_);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) o[i * nc + j] = v[(r0 + i) * cols_ + c0 + j];
    }
  });
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  check_fields(*this, m);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error("Matrix::set_block out of range");
  dispatch(m, [&](const auto&, const auto& src) {
    auto& dst = std::get<std::decay_t<decltype(src)>>(data_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) dst[(r0 + i) * cols_ + c0 + j] = src[i * m.cols_ + j];
    }
  });
}

std::vector<Scalar> Matrix::column_entries(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  dispatch_mut(out, [&](const auto& ops, auto& v) {
    for (auto& x : v) x = ops.neg(x);
  });
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  check_fields(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix sum: shape mismatch");
  dispatch(other, [&](const auto& ops, const auto& src) {
    auto& dst = std::get<std::decay_t<decltype(src)>>(data_);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = ops.add(dst[i], src[i]);
  });
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) { return *this += -other; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.cols_ != b.rows_) {
    throw Error("matrix product: shape mismatch " + std::to_string(a.rows_) + "x" +
                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                std::to_string(b.cols_));
  }
  Matrix out(a.field_, a.rows_, b.cols_);
  if (a.field_.is_prime_field()) {
    // Accumulate unreduced in 64 bits; p < 2^31 so a few products fit before overflow.
    const std::uint64_t p = a.field_.characteristic();
    const auto& x = std::get<0>(a.data_);
    const auto& y = std::get<0>(b.data_);
    auto& o = std::get<0>(out.data_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        std::uint64_t f = x[i * a.cols_ + k];
        if (f == 0) continue;
        const std::uint32_t* row = &y[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + f * row[j]) % p;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) o[i * b.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    const auto& x = std::get<1>(a.data_);
    const auto& y = std::get<1>(b.data_);
    auto& o = std::get<1>(out.data_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& f = x[i * a.cols_ + k];
        if (f == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) o[i * b.cols_ + j] += f * y[k * b.cols_ + j];
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  if (!(s.field() == m.field_)) throw Error("scalar * matrix: field mismatch");
  Matrix out = m;
  dispatch_mut(out, [&](const auto& ops, auto& v) {
    auto f = ops.from(s);
    for (auto& x : v) x = ops.mul(f, x);
  });
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).to_string();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.rows() != b.rows()) throw Error("hstack: row count mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.cols() != b.cols()) throw Error("vstack: column count mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, const Field& field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix out(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_zero_at(i, j)) continue;
      out.set_block(i * b.rows(), j * b.cols(), a.at(i, j) * b);
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, {}, 0};
  result.pivot_columns = dispatch_mut(result.reduced, [&](const auto& ops, auto& v) {
    return rref_in_place(ops, v, m.rows(), m.cols());
  });
  result.rank = result.pivot_columns.size();
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  Matrix basis(m.field(), n, n - r.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, 1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (!r.reduced.is_zero_at(i, free)) basis.set(r.pivot_columns[i], k, -r.reduced.at(i, free));
    }
    ++k;
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error("solve: dimension mismatch (" + std::to_string(a.rows()) + " rows vs " +
                std::to_string(b.rows()) + ")");
  }
  auto r = rref(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = r.pivot_columns[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!r.reduced.is_zero_at(i, a.cols() + j)) x.set(pc, j, r.reduced.at(i, a.cols() + j));
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix column_space_basis(const Matrix& m) { return m.columns(rref(m).pivot_columns); }

Matrix complement_basis(const Matrix& basis) {
  const std::size_t n = basis.rows();
  auto r = rref(hstack(basis, Matrix::identity(basis.field(), n)));
  std::vector<std::size_t> picks;
  for (auto c : r.pivot_columns) {
    if (c >= basis.cols()) picks.push_back(c - basis.cols());
  }
  return Matrix::identity(basis.field(), n).columns(picks);
}

Matrix left_inverse(const Matrix& basis) {
  Matrix full = hstack(basis, complement_basis(basis));
  auto inv = inverse(full);
  if (!inv) throw Error("left_inverse: columns are not independent");
  return inv->block(0, 0, basis.cols(), basis.rows());
}

Matrix intersection_basis(const Matrix& a, const Matrix& b) {
  Matrix k = kernel_basis(hstack(a, -b));
  Matrix combos = a * k.block(0, 0, a.cols(), k.cols());
  return column_space_basis(combos);
}

bool span_contains(const Matrix& b, const Matrix& a) {
  return rank(hstack(b, a)) == rank(b);
}

}  // namespace ezd::linalg
