#pragma once

// Storage scheme over a unidirectional ring of n nodes. Data flows from node
// i+1 to node i (node 1 sends to node n); a user reads through exactly one
// node. Nodes are numbered 1..n throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringstore/algebra.hpp"

namespace ringstore {

// One end of a ring link: a storage node, the user attached to a node, or the
// substituted node standing in for a failed one.
struct LinkEnd {
  enum class Kind { Node, User, Substitute };

  Kind kind = Kind::Node;
  std::size_t node = 0;

  static LinkEnd storage(std::size_t node) { return {Kind::Node, node}; }
  static LinkEnd user(std::size_t node) { return {Kind::User, node}; }
  static LinkEnd substitute(std::size_t node) { return {Kind::Substitute, node}; }

  // "N3", "U1", "N2'".
  std::string label() const;

  friend auto operator<=>(const LinkEnd&, const LinkEnd&) = default;
};

class Scheme {
 public:
  // Node i owns columns [(i-1)*alpha, i*alpha) of g.
  // Throws PartitionMismatch, NotFullRank or TooFewNodes.
  Scheme(Matrix g, std::size_t n, std::size_t alpha);

  std::size_t n() const noexcept { return n_; }
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t m() const noexcept { return g_.rows(); }
  const FieldSpec& field() const noexcept { return g_.field(); }
  const Matrix& g() const noexcept { return g_; }

  // ceil(m / alpha): the number of nodes a reconstruction must draw from.
  std::size_t k() const noexcept { return (m() + alpha_ - 1) / alpha_; }
  // m - (k-1)*alpha, in (0, alpha].
  std::size_t gamma() const noexcept { return m() - (k() - 1) * alpha_; }

  // Node reached by walking `offset` hops upstream of `node` (against the
  // data flow), i.e. node + offset wrapped into 1..n.
  std::size_t upstream(std::size_t node, std::size_t offset) const noexcept {
    return (node - 1 + offset) % n_ + 1;
  }

  // Global column index of the j-th (0-based) node vector of `node`.
  std::size_t column_index(std::size_t node, std::size_t j) const noexcept {
    return (node - 1) * alpha_ + j;
  }
  std::vector<std::size_t> node_columns(std::size_t node) const;
  Matrix node_matrix(std::size_t node) const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  Matrix g_;
  std::size_t n_;
  std::size_t alpha_;
};

Scheme make_scheme(Matrix g, std::size_t n, std::size_t alpha);

// symbols[i][j] is the j-th node symbol of node i+1.
struct StoredState {
  std::vector<RowVector> symbols;

  friend bool operator==(const StoredState&, const StoredState&) = default;
};

StoredState encode(const Scheme& s, std::span<const Elem> x);

struct ValidationReport {
  bool is_ordss = false;
  // Starting nodes of the windows of k-1 adjacent nodes whose node vectors
  // are dependent.
  std::vector<std::size_t> failed_window_condition_i;
  // Starting nodes of the windows of k adjacent nodes with rank below m.
  std::vector<std::size_t> failed_window_condition_ii;
};

ValidationReport validate_ordss(const Scheme& s);

// k*m - (k-1)*k*alpha/2 with k = ceil(m/alpha). Throws TooFewNodes if
// n < k and BadArguments for zero parameters.
std::uint64_t reconstruct_lower_bound(std::size_t n, std::size_t alpha,
                                      std::size_t m);

std::uint64_t repair_lower_bound(const Scheme& s);

struct CutConstraint {
  LinkEnd from;
  LinkEnd to;
  std::size_t min_symbols = 0;

  friend bool operator==(const CutConstraint&, const CutConstraint&) = default;
};

// Minimum link loads for the user attached to node 1: the link out of node i
// (i = 1..k) must carry at least m - (i-1)*alpha symbols. Links further
// upstream are unconstrained and omitted.
std::vector<CutConstraint> cut_constraints(std::size_t n, std::size_t alpha,
                                           std::size_t m);

}  // namespace ringstore
