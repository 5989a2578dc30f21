#include <random>

#include "doctest.h"
#include "ezd/linalg/matrix.hpp"

using namespace ezd::linalg;

namespace {

const Field QQ = Field::rationals();
const Field GF5 = Field::prime(5);
const Field GF101 = Field::prime(101);

// Cofactor determinant, independent of elimination.
Scalar det2(const Matrix& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

}  // namespace

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field::prime(4), ezd::Error);
  CHECK_THROWS_AS(Field::prime(1), ezd::Error);
  CHECK(Field::prime(2).name() == "GF(2)");
  CHECK(QQ.name() == "QQ");
}

TEST_CASE("scalars are canonical") {
  CHECK(Scalar(GF5, -1) == Scalar(GF5, 4));
  CHECK(Scalar(GF5, Rational(1, 2)) == Scalar(GF5, 3));
  CHECK(Scalar(QQ, Rational(2, 4)) == Scalar(QQ, Rational(1, 2)));
  CHECK((Scalar(GF101, 7) * Scalar(GF101, 7).inverse()).is_one());
  CHECK_THROWS_AS(Scalar(GF5, 0).inverse(), ezd::Error);
  CHECK_THROWS_AS(Scalar(GF5, 1) + Scalar(GF101, 1), ezd::Error);
}

TEST_CASE("rref examples") {
  auto r = rref(Matrix::from_ints(QQ, 2, 2, {1, 2, 2, 4}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.reduced == Matrix::from_ints(QQ, 2, 2, {1, 2, 0, 0}));

  auto id = Matrix::identity(QQ, 3);
  CHECK(rref(id).reduced == id);
  CHECK(rref(id).rank == 3);

  auto m = Matrix::from_ints(GF5, 2, 2, {2, 1, 1, 3});
  CHECK(det2(m).is_zero());
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix(QQ, 2, 3)).cols() == 3);
  auto k = kernel_basis(Matrix::from_ints(QQ, 2, 2, {1, 2, 2, 4}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::from_ints(QQ, 2, 1, {-2, 1}));
  CHECK(kernel_basis(Matrix::from_ints(QQ, 2, 2, {1, 1, 0, 1})).cols() == 0);
}

TEST_CASE("solve examples") {
  auto a = Matrix::from_ints(QQ, 2, 2, {1, 2, 2, 4});
  auto x = solve(a, Matrix::from_ints(QQ, 2, 1, {1, 2}));
  REQUIRE(x);
  CHECK(a * *x == Matrix::from_ints(QQ, 2, 1, {1, 2}));
  CHECK(!solve(a, Matrix::from_ints(QQ, 2, 1, {1, 0})));
  auto b = Matrix::from_ints(QQ, 3, 1, {4, 5, 6});
  CHECK(*solve(Matrix::identity(QQ, 3), b) == b);
  CHECK_THROWS_AS(solve(a, b), ezd::Error);
}

TEST_CASE("property: rref idempotent, rank-nullity, solvability criterion") {
  std::mt19937_64 rng(12345);
  for (const Field& f : {GF5, GF101, Field::prime(2), QQ}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + rng() % 6;
      std::size_t cols = 1 + rng() % 6;
      Matrix m = Matrix::random(f, rows, cols, rng);
      if (trial % 3 == 0 && rows > 1) {
        // force a dependent row
        m.set_block(rows - 1, 0, m.block(0, 0, 1, cols));
      }
      auto r = rref(m);
      CHECK(rref(r.reduced).reduced == r.reduced);
      Matrix k = kernel_basis(m);
      CHECK(r.rank + k.cols() == cols);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());

      Matrix b = Matrix::random(f, rows, 1, rng);
      auto x = solve(m, b);
      CHECK(x.has_value() == (rank(hstack(m, b)) == r.rank));
      if (x) CHECK(m * *x == b);
    }
  }
}

TEST_CASE("subspace helpers") {
  std::mt19937_64 rng(7);
  auto w = Matrix::random(GF101, 5, 2, rng);
  REQUIRE(rank(w) == 2);
  auto e = complement_basis(w);
  CHECK(e.cols() == 3);
  CHECK(is_invertible(hstack(w, e)));
  CHECK(left_inverse(w) * w == Matrix::identity(GF101, 2));
  auto a = Matrix::from_ints(QQ, 3, 2, {1, 0, 0, 1, 0, 0});
  auto b = Matrix::from_ints(QQ, 3, 2, {0, 0, 1, 0, 0, 1});
  auto i = intersection_basis(a, b);
  CHECK(i.cols() == 1);
  CHECK(span_contains(a, i));
  CHECK(span_contains(b, i));
  auto inv = inverse(Matrix::from_ints(QQ, 2, 2, {2, 1, 1, 1}));
  REQUIRE(inv);
  CHECK(*inv == Matrix::from_ints(QQ, 2, 2, {1, -1, -1, 2}));
}

TEST_CASE("kron layout") {
  auto a = Matrix::from_ints(QQ, 1, 2, {1, 2});
  auto b = Matrix::from_ints(QQ, 2, 1, {3, 4});
  CHECK(kron(a, b) == Matrix::from_ints(QQ, 2, 2, {3, 6, 4, 8}));
}
