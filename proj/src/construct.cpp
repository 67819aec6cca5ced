#include "ringstore/construct.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "ringstore/errors.hpp"
#include "ringstore/prng.hpp"

namespace ringstore {

namespace {

// Calls visit(indices) for every size-k subset of {0..n-1} in lexicographic
// order; stops early when visit returns false. Returns false if stopped.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Matrix repeated_identity(FieldSpec field, std::size_t size, std::size_t copies) {
  std::vector<Elem> e(size * size * copies, 0);
  const std::size_t cols = size * copies;
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < size; ++i) e[i * cols + c * size + i] = 1;
  }
  return {field, size, cols, std::move(e)};
}

void require_subset_budget(std::size_t n, std::size_t k) {
  if (binomial(n, k) > kMaxSubsets) {
    throw Error(ErrorCode::InstanceTooLarge,
                "C(" + std::to_string(n) + ", " + std::to_string(k) +
                    ") column subsets exceed the exhaustive-check limit");
  }
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step; guard the multiply.
    const std::uint64_t factor = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t d = i / g;
    const std::uint64_t f = factor / d;
    if (r > kMax / f) return kMax;
    result = r * f;
  }
  return result;
}

EuclidChain euclid_chain(std::size_t m0, std::size_t m1) {
  if (m1 == 0 || m1 >= m0) {
    throw Error(ErrorCode::BadArguments,
                "euclid chain needs 0 < m1 < m0, got m0=" + std::to_string(m0) +
                    " m1=" + std::to_string(m1));
  }
  EuclidChain chain{{m0, m1}, {}};
  std::size_t a = m0, b = m1;
  while (true) {
    chain.p.push_back(a / b);
    const std::size_t rem = a % b;
    if (rem == 0) break;
    chain.m.push_back(rem);
    a = b;
    b = rem;
  }
  return chain;
}

Matrix build_ed_matrix(std::size_t rows, std::size_t cols) {
  if (rows == 0 || rows >= cols) {
    throw Error(ErrorCode::BadArguments,
                "ED-matrix needs 0 < rows < cols, got " + std::to_string(rows) +
                    "x" + std::to_string(cols));
  }
  const FieldSpec gf2(2);
  const Matrix head = repeated_identity(gf2, rows, cols / rows);
  const std::size_t rem = cols % rows;
  if (rem == 0) return head;
  return hconcat(head, build_ed_matrix(rem, rows).transpose());
}

bool check_weak_column_mds(const Matrix& a) {
  if (a.rows() > a.cols()) {
    throw Error(ErrorCode::ShapeError,
                "weak-column check needs rows <= cols, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  for (std::size_t start = 0; start < a.cols(); ++start) {
    if (mat_rank(columns_cyclic_window(a, start, a.rows())) != a.rows()) {
      return false;
    }
  }
  return true;
}

bool check_weak_row_mds(const Matrix& a) {
  if (a.rows() <= a.cols()) {
    throw Error(ErrorCode::ShapeError,
                "weak-row check needs rows > cols, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return check_weak_column_mds(a.transpose());
}

bool check_full_mds(const Matrix& a) {
  if (a.rows() > a.cols()) {
    throw Error(ErrorCode::ShapeError,
                "full MDS check needs rows <= cols, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  require_subset_budget(a.cols(), a.rows());
  return for_each_subset(a.cols(), a.rows(), [&](const auto& idx) {
    return mat_rank(a.select_columns(idx)) == a.rows();
  });
}

Matrix build_cauchy_mds(std::size_t m, std::size_t n_cols, FieldSpec field) {
  if (m == 0 || m > n_cols) {
    throw Error(ErrorCode::BadArguments,
                "Cauchy construction needs 0 < m <= n_cols");
  }
  if (field.p() < n_cols) {
    throw Error(ErrorCode::FieldTooSmall,
                "GF(" + std::to_string(field.p()) + ") has fewer than " +
                    std::to_string(n_cols) + " elements");
  }
  std::vector<Elem> e(m * n_cols, 0);
  for (std::size_t i = 0; i < m; ++i) {
    e[i * n_cols + i] = 1;
    for (std::size_t j = 0; j < n_cols - m; ++j) {
      const Elem diff = field.sub(field.reduce(static_cast<std::int64_t>(i)),
                                  field.reduce(static_cast<std::int64_t>(m + j)));
      e[i * n_cols + m + j] = field.inv(diff);
    }
  }
  return {field, m, n_cols, std::move(e)};
}

Matrix greedy_mds_columns(std::size_t m, std::size_t n_cols, FieldSpec field,
                          std::uint64_t seed) {
  if (m == 0 || m > n_cols) {
    throw Error(ErrorCode::BadArguments,
                "greedy construction needs 0 < m <= n_cols");
  }
  require_subset_budget(n_cols, m);
  // q > C(n_cols-1, m-1) guarantees every draw phase can succeed, but smaller
  // fields often work too (an [8,5] MDS code exists over GF(11)). Only
  // shapes that admit no MDS code at all over GF(p) are refused up front.
  if (m >= 2 && m < n_cols && n_cols > std::uint64_t{field.p()} + m - 1) {
    throw Error(ErrorCode::FieldTooSmall,
                "no " + std::to_string(m) + "x" + std::to_string(n_cols) +
                    " MDS matrix exists over GF(" + std::to_string(field.p()) + ")");
  }

  std::vector<std::vector<Elem>> columns;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Elem> unit(m, 0);
    unit[i] = 1;
    columns.push_back(std::move(unit));
  }

  Lcg64 rng(seed);
  const std::uint64_t max_draws = 10ULL * field.p() * n_cols;
  std::uint64_t draws = 0;
  while (columns.size() < n_cols) {
    if (draws++ >= max_draws) {
      throw Error(ErrorCode::NonTermination,
                  "no admissible column after " + std::to_string(max_draws) +
                      " draws");
    }
    std::vector<Elem> candidate(m);
    for (auto& v : candidate) v = rng.next_mod(field.p());

    const bool avoids_all_spans =
        for_each_subset(columns.size(), m - 1, [&](const auto& idx) {
          std::vector<std::vector<Elem>> picked;
          for (std::size_t j : idx) picked.push_back(columns[j]);
          picked.push_back(candidate);
          return mat_rank(Matrix::from_columns(field, m, picked)) == m;
        });
    if (avoids_all_spans) columns.push_back(std::move(candidate));
  }
  return Matrix::from_columns(field, m, columns);
}

}  // namespace ringstore
