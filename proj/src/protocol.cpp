#include "ringstore/protocol.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ringstore/errors.hpp"

namespace ringstore {

namespace {

void require_node(const Scheme& s, std::size_t node) {
  if (node < 1 || node > s.n()) {
    throw Error(ErrorCode::BadNodeIndex,
                "node " + std::to_string(node) + " not in 1.." +
                    std::to_string(s.n()));
  }
}

void require_ordss(const Scheme& s) {
  if (!validate_ordss(s).is_ordss) {
    throw Error(ErrorCode::NotOrdss,
                "scheme violates the optimal-reconstruction window conditions");
  }
}

// Extends `chosen` with up to `want` columns of `candidates`, lowest index
// first, keeping each only if it raises the rank.
std::vector<std::size_t> extend_basis(const Matrix& g,
                                      std::vector<std::size_t> chosen,
                                      const std::vector<std::size_t>& candidates,
                                      std::size_t want) {
  std::vector<std::size_t> picked;
  std::size_t rank = mat_rank(g.select_columns(chosen));
  for (std::size_t c : candidates) {
    if (picked.size() == want) break;
    chosen.push_back(c);
    const std::size_t r = mat_rank(g.select_columns(chosen));
    if (r > rank) {
      rank = r;
      picked.push_back(c);
    } else {
      chosen.pop_back();
    }
  }
  return picked;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a,
                                const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Builds a transfer whose sender holds `received` (vectors of the previous
// hop) plus its own node vectors and must put `payload` on the wire.
LinkTransfer make_transfer(const Scheme& s, LinkEnd from, LinkEnd to,
                           const Matrix* received, Matrix payload) {
  const Matrix own = s.node_matrix(from.node);
  const Matrix inputs = received ? hconcat(*received, own) : own;
  Matrix recipe = express_in_columns(inputs, payload);
  return {from, to, std::move(payload), std::move(recipe)};
}

template <typename Plan>
void require_plan_matches(const Scheme& s, const StoredState& st,
                          const Plan& plan) {
  bool ok = plan.field == s.field() && plan.n == s.n() &&
            plan.alpha == s.alpha() && plan.m == s.m() &&
            st.symbols.size() == s.n() && !plan.hops.empty();
  std::size_t received = 0;
  for (const auto& hop : plan.hops) {
    if (!ok) break;
    ok = hop.from.kind == LinkEnd::Kind::Node && hop.from.node >= 1 &&
         hop.from.node <= s.n() &&
         hop.recipe.rows() == received + s.alpha() &&
         hop.recipe.cols() == hop.payload.cols() &&
         hop.recipe.field() == s.field() &&
         st.symbols[hop.from.node - 1].size() == s.alpha();
    received = hop.recipe.cols();
  }
  if (!ok) {
    throw Error(ErrorCode::PlanSchemeMismatch,
                "plan was not produced for this scheme and state");
  }
}

// Runs the hop chain against stored symbols and returns the symbols delivered
// by the last hop together with the total symbol count sent.
std::pair<RowVector, std::uint64_t> run_hops(const StoredState& st,
                                             const std::vector<LinkTransfer>& hops) {
  RowVector wire;
  std::uint64_t sent = 0;
  for (const auto& hop : hops) {
    RowVector inputs = std::move(wire);
    const auto& own = st.symbols[hop.from.node - 1];
    inputs.insert(inputs.end(), own.begin(), own.end());
    wire = vec_mat_mul(inputs, hop.recipe);
    sent += wire.size();
  }
  return {std::move(wire), sent};
}

}  // namespace

ReconstructionPlan plan_reconstruction(const Scheme& s, std::size_t user_node) {
  require_node(s, user_node);
  require_ordss(s);
  const std::size_t k = s.k();
  const Matrix& g = s.g();

  std::vector<std::size_t> full;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    full = concat(std::move(full), s.node_columns(s.upstream(user_node, i)));
  }
  const std::size_t far_node = s.upstream(user_node, k - 1);
  const auto tail = extend_basis(g, full, s.node_columns(far_node), s.gamma());

  ReconstructionPlan plan{s.field(), s.n(), s.alpha(), s.m(), user_node, {}, {}, 0};
  plan.basis_columns = concat(full, tail);

  // Node u+k-1 sends its gamma basis columns; each node below forwards what
  // it received plus its own columns; node u decodes and hands X to the user.
  std::optional<Matrix> wire;
  for (std::size_t i = k; i >= 1; --i) {
    const std::size_t node = s.upstream(user_node, i - 1);
    const bool last = i == 1;
    const LinkEnd to = last ? LinkEnd::user(user_node)
                            : LinkEnd::storage(s.upstream(user_node, i - 2));
    Matrix payload = last ? Matrix::identity(s.field(), s.m())
                     : i == k ? g.select_columns(tail)
                              : hconcat(*wire, s.node_matrix(node));
    auto hop = make_transfer(s, LinkEnd::storage(node), to,
                             wire ? &*wire : nullptr, std::move(payload));
    wire = hop.payload;
    plan.bandwidth += hop.size();
    plan.hops.push_back(std::move(hop));
  }
  return plan;
}

ReconstructionResult execute_reconstruction(const Scheme& s,
                                            const StoredState& st,
                                            const ReconstructionPlan& plan) {
  require_plan_matches(s, st, plan);
  if (plan.basis_columns.size() != s.m() ||
      mat_rank(s.g().select_columns(plan.basis_columns)) != s.m()) {
    throw Error(ErrorCode::SingularBasis,
                "plan's decoding basis does not span the data");
  }
  auto [data, sent] = run_hops(st, plan.hops);
  if (data.size() != s.m()) {
    throw Error(ErrorCode::PlanSchemeMismatch,
                "final hop delivers " + std::to_string(data.size()) +
                    " symbols, expected " + std::to_string(s.m()));
  }
  return {std::move(data), sent};
}

RepairPlan plan_repair(const Scheme& s, std::size_t failed_node) {
  require_node(s, failed_node);
  require_ordss(s);
  const std::size_t k = s.k();
  if (s.n() < k + 1) {
    throw Error(ErrorCode::RingTooShort,
                "repair needs n >= k+1 = " + std::to_string(k + 1) +
                    " nodes, ring has " + std::to_string(s.n()));
  }
  const Matrix& g = s.g();
  const Matrix failed = s.node_matrix(failed_node);
  // rel(i) is the i-th node counting the failed node as 1, walking upstream.
  auto rel = [&](std::size_t i) { return s.upstream(failed_node, i - 1); };

  RepairPlan plan{s.field(), s.n(),
                  s.alpha(), s.m(),
                  failed_node, {},
                  {{}, {}, Matrix(s.field(), 0, 0)},
                  Matrix(s.field(), 0, 0), Matrix(s.field(), 0, 0),
                  0};

  if (k == 1) {
    // The successor alone holds m independent vectors; it ships them and the
    // substituted node decodes X and re-encodes its own symbols.
    const auto sent = extend_basis(g, {}, s.node_columns(rel(2)), s.m());
    auto hop = make_transfer(s, LinkEnd::storage(rel(2)),
                             LinkEnd::substitute(failed_node), nullptr,
                             g.select_columns(sent));
    plan.expression_coeffs = {sent, s.node_columns(failed_node),
                              express_in_columns(hop.payload, failed).transpose()};
    plan.final_system = hop.payload;
    plan.final_map = failed;
    plan.bandwidth = hop.size();
    plan.hops.push_back(std::move(hop));
    return plan;
  }

  // Basis around the failed node: nodes 1..k-1 in full plus gamma of node k.
  std::vector<std::size_t> basis;
  for (std::size_t i = 1; i < k; ++i) basis = concat(std::move(basis), s.node_columns(rel(i)));
  const auto near_cols = s.node_columns(rel(k));
  const auto near_basis = extend_basis(g, basis, near_cols, s.gamma());
  basis = concat(std::move(basis), near_basis);

  // Node k+1 sends gamma columns completing nodes 2..k to a basis.
  std::vector<std::size_t> helpers;
  for (std::size_t i = 2; i <= k; ++i) helpers = concat(std::move(helpers), s.node_columns(rel(i)));
  const auto far_sent = extend_basis(g, helpers, s.node_columns(rel(k + 1)), s.gamma());

  std::vector<std::size_t> extras = far_sent;
  for (std::size_t c : near_cols) {
    if (std::find(near_basis.begin(), near_basis.end(), c) == near_basis.end()) {
      extras.push_back(c);
    }
  }

  const Matrix basis_matrix = g.select_columns(basis);
  // coeffs(b, e): weight of basis column b in extra e.
  const Matrix coeffs = express_in_columns(basis_matrix, g.select_columns(extras));
  plan.expression_coeffs = {basis, extras, coeffs.transpose()};

  auto first = make_transfer(s, LinkEnd::storage(rel(k + 1)),
                             LinkEnd::storage(rel(k)), nullptr,
                             g.select_columns(far_sent));
  Matrix wire = first.payload;
  plan.bandwidth += first.size();
  plan.hops.push_back(std::move(first));

  // Node i strips the basis terms of nodes >= i, leaving only the parts owned
  // by nodes 1..i-1.
  for (std::size_t i = k; i >= 2; --i) {
    const std::size_t keep = (i - 1) * s.alpha();
    std::vector<Elem> truncated(coeffs.entries());
    for (std::size_t b = keep; b < coeffs.rows(); ++b) {
      for (std::size_t e = 0; e < coeffs.cols(); ++e) truncated[b * coeffs.cols() + e] = 0;
    }
    Matrix payload = mat_mul(basis_matrix,
                             Matrix(s.field(), coeffs.rows(), coeffs.cols(),
                                    std::move(truncated)));
    const LinkEnd to = i == 2 ? LinkEnd::substitute(failed_node)
                              : LinkEnd::storage(rel(i - 1));
    auto hop = make_transfer(s, LinkEnd::storage(rel(i)), to, &wire,
                             std::move(payload));
    wire = hop.payload;
    plan.bandwidth += hop.size();
    plan.hops.push_back(std::move(hop));
  }

  plan.final_system = express_in_columns(failed, wire);
  if (mat_rank(plan.final_system) != s.alpha()) {
    throw Error(ErrorCode::SingularFinalSystem,
                "vectors delivered to the substituted node are dependent");
  }
  plan.final_map = Matrix::identity(s.field(), s.alpha());
  return plan;
}

RepairResult execute_repair(const Scheme& s, const StoredState& st,
                            const RepairPlan& plan) {
  require_plan_matches(s, st, plan);
  for (const auto& hop : plan.hops) {
    if (hop.from.node == plan.failed_node) {
      throw Error(ErrorCode::PlanSchemeMismatch,
                  "repair plan reads from the failed node");
    }
  }
  auto [received, sent] = run_hops(st, plan.hops);
  if (plan.final_system.rows() != plan.final_system.cols() ||
      plan.final_system.cols() != received.size() ||
      plan.final_map.rows() != received.size() ||
      plan.final_map.cols() != s.alpha()) {
    throw Error(ErrorCode::PlanSchemeMismatch,
                "final system does not match the delivered symbols");
  }
  RowVector solved;
  try {
    solved = row_vec_solve(plan.final_system, received);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::SingularFinalSystem,
                "substituted node cannot solve for its symbols");
  }
  return {vec_mat_mul(solved, plan.final_map), sent};
}

bool verify_plan_against_cuts(const ReconstructionPlan& plan,
                              const std::vector<CutConstraint>& constraints) {
  bool context_ok = !constraints.empty() && constraints.size() <= plan.n &&
                    constraints.front().min_symbols == plan.m;
  for (std::size_t i = 0; context_ok && i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    const LinkEnd expected_to =
        i == 0 ? LinkEnd::user(1) : LinkEnd::storage(i);
    context_ok = c.from == LinkEnd::storage(i + 1) && c.to == expected_to &&
                 c.min_symbols + i * plan.alpha == plan.m;
  }
  if (!context_ok) {
    throw Error(ErrorCode::ContextMismatch,
                "cut constraints do not belong to (n=" + std::to_string(plan.n) +
                    ", alpha=" + std::to_string(plan.alpha) +
                    ", M=" + std::to_string(plan.m) + ")");
  }

  // Load per link, keyed by the sender's position counted from the user's
  // node (1 = user's node).
  std::map<std::size_t, std::size_t> load;
  for (const auto& hop : plan.hops) {
    const std::size_t relative =
        (hop.from.node + plan.n - plan.user_node) % plan.n + 1;
    const std::size_t expected_to =
        relative == 1 ? 0 : (hop.to.node + plan.n - plan.user_node) % plan.n + 1;
    const bool to_ok = relative == 1
                           ? hop.to == LinkEnd::user(plan.user_node)
                           : hop.to.kind == LinkEnd::Kind::Node &&
                                 expected_to + 1 == relative;
    if (!to_ok) return false;
    load[relative] += hop.size();
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    auto it = load.find(i + 1);
    const std::size_t carried = it == load.end() ? 0 : it->second;
    if (carried < constraints[i].min_symbols) return false;
  }
  for (const auto& [relative, carried] : load) {
    if (relative > constraints.size() && carried != 0) return false;
  }
  return true;
}

}  // namespace ringstore
