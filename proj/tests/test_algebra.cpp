#include <doctest.h>

#include <algorithm>
#include <random>

#include "ringstore/algebra.hpp"
#include "ringstore/errors.hpp"
#include "test_support.hpp"

using namespace ringstore;
using namespace ringstore::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadArguments;
}

}  // namespace

TEST_CASE("field construction rejects composite moduli") {
  CHECK(code_of([] { FieldSpec f(4); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { FieldSpec f(1); }) == ErrorCode::NotPrime);
  CHECK(FieldSpec(2).p() == 2);
  CHECK(smallest_prime_at_least(8) == 11);
  CHECK(smallest_prime_at_least(11) == 11);
  CHECK(smallest_prime_at_least(0) == 2);
}

TEST_CASE("fe_inv") {
  CHECK(fe_inv(FieldElement(kGf11, 1)).value() == 1);
  CHECK(fe_inv(FieldElement(kGf11, 6)).value() == 2);
  CHECK(fe_inv(FieldElement(kGf2, 1)).value() == 1);
  CHECK(code_of([] { fe_inv(FieldElement(kGf11, 0)); }) == ErrorCode::ZeroInverse);
  CHECK(code_of([] { FieldElement(kGf11, 11); }) == ErrorCode::OutOfField);

  SUBCASE("every unit of GF(101) inverts") {
    const FieldSpec f(101);
    for (Elem a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("field elements require matching fields") {
  const FieldElement a(kGf11, 3), b(kGf11, 9);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 5);
  CHECK(code_of([&] { return a + FieldElement(kGf2, 1); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("mat_mul") {
  SUBCASE("symbolic data times the binary ED generator") {
    // Row i of the identity plays x_{i+1}; the product's column j lists which
    // x's appear in coordinate j.
    const Matrix xg = mat_mul(Matrix::identity(kGf2, 5), binary_ed_matrix());
    CHECK(xg.column(0) == RowVector{1, 0, 0, 0, 0});
    CHECK(xg.column(4) == RowVector{0, 0, 0, 0, 1});
    CHECK(xg.column(5) == RowVector{1, 0, 0, 1, 0});  // x1+x4
    CHECK(xg.column(6) == RowVector{0, 1, 0, 0, 1});  // x2+x5
    CHECK(xg.column(7) == RowVector{0, 0, 1, 1, 1});  // x3+x4+x5
  }
  SUBCASE("identity is neutral") {
    const Matrix a = Matrix::from_rows(FieldSpec(5), {{1, 2, 3}, {4, 0, 1}, {2, 2, 2}});
    CHECK(mat_mul(Matrix::identity(FieldSpec(5), 3), a) == a);
  }
  SUBCASE("first data row against the GF(11) MDS generator") {
    const Elem x[] = {1, 0, 0, 0, 0};
    CHECK(vec_mat_mul(x, gf11_mds_matrix()) == RowVector{1, 0, 0, 0, 0, 1, 5, 4});
  }
  SUBCASE("errors") {
    const Matrix a(kGf2, 2, 3), b(kGf2, 2, 3), c(kGf11, 3, 1);
    CHECK(code_of([&] { mat_mul(a, b); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { mat_mul(a, c); }) == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("mat_rank") {
  CHECK(mat_rank(Matrix::identity(kGf11, 5)) == 5);
  CHECK(mat_rank(gf11_mds_matrix()) == 5);
  CHECK(mat_rank(Matrix(kGf11, 3, 3)) == 0);
  CHECK(mat_rank(Matrix(kGf11, 0, 4)) == 0);
}

TEST_CASE("rank agrees with a brute-force oracle and with the transpose") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      const Matrix a = random_matrix(rng, f, rows, cols);
      CHECK(mat_rank(a) == brute_force_rank(a));
    }
  }
  for (std::uint32_t p : {2u, 5u, 11u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      Matrix a = random_matrix(rng, f, rows, cols);
      if (trial % 3 == 0 && rows > 1) {
        // Force a dependent row so low-rank cases show up.
        std::vector<std::size_t> idx(rows);
        for (std::size_t r = 0; r < rows; ++r) idx[r] = r;
        idx[rows - 1] = 0;
        a = a.select_rows(idx);
      }
      CHECK(mat_rank(a) == mat_rank(a.transpose()));
    }
  }
}

TEST_CASE("mat_inverse") {
  CHECK(mat_inverse(Matrix::identity(kGf11, 4)) == Matrix::identity(kGf11, 4));
  const Matrix shear = Matrix::from_rows(kGf2, {{1, 1}, {0, 1}});
  CHECK(mat_inverse(shear) == shear);

  SUBCASE("2x2 over GF(5) matches the adjugate formula") {
    const FieldSpec f(5);
    const Matrix a = Matrix::from_rows(f, {{2, 3}, {4, 2}});
    // inv = det^-1 * [[d, -b], [-c, a]]
    const Elem det = f.sub(f.mul(2, 2), f.mul(3, 4));
    const Elem s = f.inv(det);
    const Matrix oracle = Matrix::from_rows(
        f, {{f.mul(s, 2), f.mul(s, f.neg(3))}, {f.mul(s, f.neg(4)), f.mul(s, 2)}});
    CHECK(oracle == Matrix::from_rows(f, {{1, 1}, {3, 1}}));
    CHECK(mat_inverse(a) == oracle);
    CHECK(mat_mul(a, mat_inverse(a)) == Matrix::identity(f, 2));
  }

  CHECK(code_of([] { mat_inverse(Matrix(kGf11, 2, 2)); }) == ErrorCode::Singular);
  CHECK(code_of([] { mat_inverse(Matrix(kGf11, 2, 3)); }) == ErrorCode::Singular);

  SUBCASE("random invertible matrices") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 5u, 11u}) {
      const FieldSpec f(p);
      for (int t = 0; t < 20; ++t) {
        const Matrix a = random_invertible(rng, f, 1 + rng() % 8);
        CHECK(mat_mul(a, mat_inverse(a)) == Matrix::identity(f, a.rows()));
      }
    }
  }
}

TEST_CASE("row_vec_solve") {
  const RowVector y{3, 1, 4, 1, 5};
  CHECK(row_vec_solve(Matrix::identity(kGf11, 5), y) == y);
  const std::size_t first5[] = {0, 1, 2, 3, 4};
  CHECK(row_vec_solve(gf11_mds_matrix().select_columns(first5), y) == y);

  std::mt19937_64 rng(3);
  const FieldSpec f7(7);
  for (int t = 0; t < 50; ++t) {
    const Matrix g = random_invertible(rng, f7, 4);
    const RowVector x = random_vector(rng, f7, 4);
    CHECK(row_vec_solve(g, vec_mat_mul(x, g)) == x);
  }
  CHECK(code_of([] { row_vec_solve(Matrix(kGf11, 2, 2), RowVector{1, 1}); }) ==
        ErrorCode::Singular);
  CHECK(code_of([] {
          row_vec_solve(Matrix::identity(kGf11, 2), RowVector{1, 1, 1});
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("express_in_columns") {
  const FieldSpec f(5);
  // Dependent basis: third column is the sum of the first two.
  const Matrix basis = Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  const Matrix targets = Matrix::from_rows(f, {{2, 4}, {3, 0}, {0, 0}});
  const Matrix r = express_in_columns(basis, targets);
  CHECK(mat_mul(basis, r) == targets);
  CHECK(code_of([&] {
          express_in_columns(basis, Matrix::from_rows(f, {{0}, {0}, {1}}));
        }) == ErrorCode::NotInSpan);
}

TEST_CASE("columns_cyclic_window") {
  const Matrix i3 = Matrix::identity(kGf2, 3);
  const std::size_t wrap[] = {2, 0};
  CHECK(columns_cyclic_window(i3, 2, 2) == i3.select_columns(wrap));

  const Matrix g = binary_ed_matrix();
  const std::size_t expect[] = {4, 5, 6, 7, 0};
  CHECK(columns_cyclic_window(g, 4, 5) == g.select_columns(expect));
  CHECK(columns_cyclic_window(g, 0, 8) == g);
  CHECK(code_of([&] { columns_cyclic_window(g, 0, 9); }) == ErrorCode::WidthTooLarge);

  SUBCASE("a full-width window is a rotation") {
    for (std::size_t start = 0; start < g.cols(); ++start) {
      const Matrix w = columns_cyclic_window(g, start, g.cols());
      std::vector<RowVector> a, b;
      for (std::size_t c = 0; c < g.cols(); ++c) {
        a.push_back(g.column(c));
        b.push_back(w.column(c));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}
