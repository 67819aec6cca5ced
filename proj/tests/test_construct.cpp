#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "ringstore/construct.hpp"
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

Matrix ones_column_block(std::size_t m, std::size_t copies) {
  Matrix out(kGf2, m, 0);
  for (std::size_t i = 0; i < copies; ++i) out = hconcat(out, Matrix::identity(kGf2, m));
  return out;
}

// Every window of `rows` cyclically adjacent columns checked with the
// brute-force oracle rather than mat_rank.
bool oracle_weak_column_mds(const Matrix& a) {
  for (std::size_t s = 0; s < a.cols(); ++s) {
    if (!brute_force_columns_independent(columns_cyclic_window(a, s, a.rows()))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("euclid_chain") {
  auto c = euclid_chain(8, 5);
  CHECK(c.m == std::vector<std::size_t>{8, 5, 3, 2, 1});
  CHECK(c.p == std::vector<std::size_t>{1, 1, 1, 2});
  c = euclid_chain(6, 3);
  CHECK(c.m == std::vector<std::size_t>{6, 3});
  CHECK(c.p == std::vector<std::size_t>{2});
  c = euclid_chain(10, 4);
  CHECK(c.m == std::vector<std::size_t>{10, 4, 2});
  CHECK(c.p == std::vector<std::size_t>{2, 2});
  CHECK(code_of([] { euclid_chain(3, 3); }) == ErrorCode::BadArguments);
  CHECK(code_of([] { euclid_chain(3, 0); }) == ErrorCode::BadArguments);

  for (std::size_t m0 = 2; m0 <= 40; ++m0) {
    for (std::size_t m1 = 1; m1 < m0; ++m1) {
      const auto chain = euclid_chain(m0, m1);
      CHECK(chain.m.back() == std::gcd(m0, m1));
      REQUIRE(chain.m.size() == chain.p.size() + 1);
      for (std::size_t i = 1; i < chain.m.size(); ++i) {
        const std::size_t next = i + 1 < chain.m.size() ? chain.m[i + 1] : 0;
        CHECK(chain.m[i - 1] == chain.p[i - 1] * chain.m[i] + next);
      }
    }
  }
}

TEST_CASE("build_ed_matrix") {
  CHECK(build_ed_matrix(5, 8) == binary_ed_matrix());
  CHECK(build_ed_matrix(3, 6) == ones_column_block(3, 2));
  CHECK(build_ed_matrix(2, 5) ==
        Matrix::from_rows(kGf2, {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}}));
  CHECK(build_ed_matrix(1, 4) == Matrix::from_rows(kGf2, {{1, 1, 1, 1}}));
  CHECK(code_of([] { build_ed_matrix(4, 4); }) == ErrorCode::BadArguments);
}

TEST_CASE("ED matrices satisfy weak-column MDS under the brute-force oracle") {
  CHECK(oracle_weak_column_mds(build_ed_matrix(2, 5)));
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      const Matrix g = build_ed_matrix(m, n);
      CHECK(oracle_weak_column_mds(g));
      CHECK(check_weak_column_mds(g));
    }
  }
}

TEST_CASE("ED matrices: weak-row MDS of the tail block alongside weak-column MDS") {
  for (std::size_t n = 2; n <= 24; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      const Matrix g = build_ed_matrix(m, n);
      CHECK(check_weak_column_mds(g));
      const std::size_t head = (n / m) * m;
      if (head == n) continue;
      std::vector<std::size_t> tail(n - head);
      std::iota(tail.begin(), tail.end(), head);
      const Matrix g1 = g.select_columns(tail);
      // Leading identities are exact copies.
      std::vector<std::size_t> lead(head);
      std::iota(lead.begin(), lead.end(), 0);
      CHECK(g.select_columns(lead) == ones_column_block(m, n / m));
      CHECK(check_weak_row_mds(g1));
    }
  }
}

TEST_CASE("check_weak_column_mds") {
  CHECK(check_weak_column_mds(ones_column_block(2, 2)));
  CHECK(check_weak_column_mds(binary_ed_matrix()));
  CHECK_FALSE(check_weak_column_mds(
      Matrix::from_rows(kGf2, {{1, 1, 0, 0}, {0, 0, 1, 1}})));
  CHECK(code_of([] { check_weak_column_mds(Matrix(kGf2, 3, 2)); }) == ErrorCode::ShapeError);
}

TEST_CASE("check_weak_row_mds") {
  CHECK(check_weak_row_mds(ones_column_block(2, 2).transpose()));
  const std::size_t tail[] = {5, 6, 7};
  CHECK(check_weak_row_mds(binary_ed_matrix().select_columns(tail)));
  CHECK_FALSE(check_weak_row_mds(Matrix(kGf2, 3, 1)));
  CHECK(code_of([] { check_weak_row_mds(Matrix(kGf2, 2, 2)); }) == ErrorCode::ShapeError);
}

TEST_CASE("weak-row MDS is weak-column MDS of the transpose") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const FieldSpec f(p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t cols = 1 + rng() % 4;
      const std::size_t rows = cols + 1 + rng() % 4;
      const Matrix a = random_matrix(rng, f, rows, cols);
      CHECK(check_weak_row_mds(a) == check_weak_column_mds(a.transpose()));
    }
  }
}

TEST_CASE("check_full_mds") {
  CHECK(check_full_mds(gf11_mds_matrix()));
  CHECK_FALSE(check_full_mds(ones_column_block(2, 2)));
  CHECK(check_full_mds(Matrix::identity(kGf11, 4)));
  CHECK(code_of([] { check_full_mds(Matrix(kGf2, 3, 2)); }) == ErrorCode::ShapeError);
  CHECK(code_of([] { check_full_mds(Matrix(FieldSpec(101), 20, 40)); }) ==
        ErrorCode::InstanceTooLarge);

  SUBCASE("agrees with the brute-force oracle on small matrices") {
    std::mt19937_64 rng(9);
    const FieldSpec f(3);
    for (int t = 0; t < 80; ++t) {
      const std::size_t rows = 1 + rng() % 3, cols = rows + rng() % 3;
      const Matrix a = random_matrix(rng, f, rows, cols);
      bool oracle = true;
      for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != rows) continue;
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c < cols; ++c) {
          if (mask & (1u << c)) idx.push_back(c);
        }
        oracle = oracle && brute_force_columns_independent(a.select_columns(idx));
      }
      CHECK(check_full_mds(a) == oracle);
      if (oracle) CHECK(check_weak_column_mds(a));
    }
  }
  SUBCASE("full MDS implies weak-column MDS on fixtures") {
    for (const Matrix& a : {gf11_mds_matrix(), build_cauchy_mds(5, 8, kGf11),
                            build_cauchy_mds(3, 10, kGf11)}) {
      REQUIRE(check_full_mds(a));
      CHECK(check_weak_column_mds(a));
    }
  }
}

TEST_CASE("build_cauchy_mds") {
  const FieldSpec f5(5);
  // 1/(i - (2 + j)) over GF(5): 1/-2 = 2, 1/-3 = 3, 1/-1 = 4, 1/-2 = 2.
  std::vector<Elem> entries;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      entries.push_back(f5.inv(f5.reduce(static_cast<std::int64_t>(i) - 2 -
                                         static_cast<std::int64_t>(j))));
    }
  }
  const Matrix expected = hconcat(Matrix::identity(f5, 2), Matrix(f5, 2, 2, entries));
  CHECK(expected == Matrix::from_rows(f5, {{1, 0, 2, 3}, {0, 1, 4, 2}}));
  CHECK(build_cauchy_mds(2, 4, f5) == expected);
  CHECK(check_full_mds(expected));

  CHECK(build_cauchy_mds(3, 3, f5) == Matrix::identity(f5, 3));
  CHECK(check_full_mds(build_cauchy_mds(5, 8, kGf11)));
  CHECK(code_of([] { build_cauchy_mds(2, 6, FieldSpec(5)); }) == ErrorCode::FieldTooSmall);
  CHECK(code_of([] { build_cauchy_mds(4, 3, FieldSpec(5)); }) == ErrorCode::BadArguments);
}

TEST_CASE("greedy_mds_columns") {
  const Matrix g = greedy_mds_columns(5, 8, kGf11, 1);
  CHECK(g.rows() == 5);
  CHECK(g.cols() == 8);
  CHECK(check_full_mds(g));
  CHECK(greedy_mds_columns(5, 8, kGf11, 1) == g);

  CHECK(greedy_mds_columns(2, 2, FieldSpec(3), 17) == Matrix::identity(FieldSpec(3), 2));
  const Matrix single = greedy_mds_columns(1, 3, FieldSpec(5), 4);
  for (std::size_t c = 0; c < 3; ++c) CHECK(single.at(0, c) != 0);

  // A 2x5 MDS matrix needs five pairwise independent columns; GF(3) has four
  // projective points.
  CHECK(code_of([] { greedy_mds_columns(2, 5, FieldSpec(3), 1); }) == ErrorCode::FieldTooSmall);
  CHECK(check_full_mds(greedy_mds_columns(2, 4, FieldSpec(3), 1)));
  CHECK(code_of([] { greedy_mds_columns(0, 3, FieldSpec(5), 1); }) == ErrorCode::BadArguments);
  CHECK(code_of([] { greedy_mds_columns(15, 40, FieldSpec(2147483647), 1); }) ==
        ErrorCode::InstanceTooLarge);
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(200, 100) == UINT64_MAX);
}
