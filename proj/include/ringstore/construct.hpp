#pragma once

// Generator-matrix constructions for ring storage schemes and brute-force
// checks of the column-independence properties they are meant to satisfy.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringstore/algebra.hpp"

namespace ringstore {

// Upper limit on the number of column subsets any exhaustive check will visit.
inline constexpr std::uint64_t kMaxSubsets = 1'000'000;

// Remainder sequence of repeated Euclidean division of m0 by m1:
// m[i-1] = p[i] * m[i] + m[i+1], ending when the remainder is zero, so that
// m.back() == gcd(m0, m1) and m.size() == p.size() + 1.
struct EuclidChain {
  std::vector<std::size_t> m;
  std::vector<std::size_t> p;
};

// Throws BadArguments unless 0 < m1 < m0.
EuclidChain euclid_chain(std::size_t m0, std::size_t m1);

// The rows x cols binary ED-matrix: `p[1]` copies of I_rows followed by the
// transpose of the ED-matrix for the next pair in the chain. When rows divides
// cols it is just [I_rows ... I_rows].
Matrix build_ed_matrix(std::size_t rows, std::size_t cols);

// Every window of rows() cyclically adjacent columns has full rank.
// Throws ShapeError if rows > cols.
bool check_weak_column_mds(const Matrix& a);

// Every window of cols() cyclically adjacent rows has full rank.
// Throws ShapeError if rows <= cols.
bool check_weak_row_mds(const Matrix& a);

// Every rows()-subset of columns has full rank. Throws ShapeError if
// rows > cols and InstanceTooLarge past kMaxSubsets subsets.
bool check_full_mds(const Matrix& a);

// Systematic [I_m | C] with C[i][j] = 1 / (i - (m + j)). Throws FieldTooSmall
// if p < n_cols, BadArguments if m > n_cols or m == 0.
Matrix build_cauchy_mds(std::size_t m, std::size_t n_cols, FieldSpec field);

// Starts from I_m and appends pseudorandom columns, keeping one only if it
// avoids the span of every (m-1)-subset of the columns chosen so far.
// Success is guaranteed when p > C(n_cols-1, m-1). Throws FieldTooSmall when
// no MDS matrix of this shape exists over GF(p) (n_cols > p + m - 1 with
// 2 <= m < n_cols), InstanceTooLarge when C(n_cols, m) > kMaxSubsets, and
// NonTermination after 10*p*n_cols rejected draws.
Matrix greedy_mds_columns(std::size_t m, std::size_t n_cols, FieldSpec field,
                          std::uint64_t seed);

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace ringstore
