#include "ringstore/scheme.hpp"

#include <string>
#include <utility>

#include "ringstore/errors.hpp"

namespace ringstore {

namespace {

void require_params(std::size_t n, std::size_t alpha, std::size_t m) {
  if (n == 0 || alpha == 0 || m == 0) {
    throw Error(ErrorCode::BadArguments, "n, alpha and M must be positive");
  }
  const std::size_t k = (m + alpha - 1) / alpha;
  if (n < k) {
    throw Error(ErrorCode::TooFewNodes,
                std::to_string(n) + " nodes of capacity " + std::to_string(alpha) +
                    " cannot hold " + std::to_string(m) + " symbols");
  }
}

// Rank of the node vectors of `count` adjacent nodes starting at `first`.
std::size_t window_rank(const Scheme& s, std::size_t first, std::size_t count) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < count; ++i) {
    auto node_cols = s.node_columns(s.upstream(first, i));
    cols.insert(cols.end(), node_cols.begin(), node_cols.end());
  }
  return mat_rank(s.g().select_columns(cols));
}

}  // namespace

std::string LinkEnd::label() const {
  switch (kind) {
    case Kind::Node: return "N" + std::to_string(node);
    case Kind::User: return "U" + std::to_string(node);
    case Kind::Substitute: return "N" + std::to_string(node) + "'";
  }
  return "?";
}

Scheme::Scheme(Matrix g, std::size_t n, std::size_t alpha)
    : g_(std::move(g)), n_(n), alpha_(alpha) {
  if (n_ == 0 || alpha_ == 0 || g_.cols() != n_ * alpha_) {
    throw Error(ErrorCode::PartitionMismatch,
                "generator has " + std::to_string(g_.cols()) +
                    " columns, expected n*alpha = " +
                    std::to_string(n_ * alpha_));
  }
  require_params(n_, alpha_, g_.rows());
  if (mat_rank(g_) != g_.rows()) {
    throw Error(ErrorCode::NotFullRank, "generator matrix is not full row rank");
  }
}

std::vector<std::size_t> Scheme::node_columns(std::size_t node) const {
  std::vector<std::size_t> cols(alpha_);
  for (std::size_t j = 0; j < alpha_; ++j) cols[j] = column_index(node, j);
  return cols;
}

Matrix Scheme::node_matrix(std::size_t node) const {
  return g_.select_columns(node_columns(node));
}

Scheme make_scheme(Matrix g, std::size_t n, std::size_t alpha) {
  return Scheme(std::move(g), n, alpha);
}

StoredState encode(const Scheme& s, std::span<const Elem> x) {
  if (x.size() != s.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "data of length " + std::to_string(x.size()) + ", expected " +
                    std::to_string(s.m()));
  }
  const RowVector coded = vec_mat_mul(x, s.g());
  StoredState st;
  st.symbols.reserve(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    st.symbols.emplace_back(coded.begin() + i * s.alpha(),
                            coded.begin() + (i + 1) * s.alpha());
  }
  return st;
}

ValidationReport validate_ordss(const Scheme& s) {
  ValidationReport report;
  const std::size_t k = s.k();
  for (std::size_t first = 1; first <= s.n(); ++first) {
    if (k > 1 && window_rank(s, first, k - 1) != (k - 1) * s.alpha()) {
      report.failed_window_condition_i.push_back(first);
    }
    if (window_rank(s, first, k) != s.m()) {
      report.failed_window_condition_ii.push_back(first);
    }
  }
  report.is_ordss = report.failed_window_condition_i.empty() &&
                    report.failed_window_condition_ii.empty();
  return report;
}

std::uint64_t reconstruct_lower_bound(std::size_t n, std::size_t alpha,
                                      std::size_t m) {
  require_params(n, alpha, m);
  const std::uint64_t k = (m + alpha - 1) / alpha;
  // (k-1)*k is always even.
  return k * m - (k - 1) * k / 2 * alpha;
}

std::uint64_t repair_lower_bound(const Scheme& s) { return s.m(); }

std::vector<CutConstraint> cut_constraints(std::size_t n, std::size_t alpha,
                                           std::size_t m) {
  require_params(n, alpha, m);
  const std::size_t k = (m + alpha - 1) / alpha;
  std::vector<CutConstraint> out;
  for (std::size_t i = 1; i <= k; ++i) {
    const LinkEnd to = i == 1 ? LinkEnd::user(1) : LinkEnd::storage(i - 1);
    out.push_back({LinkEnd::storage(i), to, m - (i - 1) * alpha});
  }
  return out;
}

}  // namespace ringstore
