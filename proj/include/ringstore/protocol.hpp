#pragma once

// Planning and execution of minimum-bandwidth reconstruction and exact repair
// over the ring.
//
// A plan is a chain of link transfers running with the data flow. Each
// transfer records two things:
//   payload - the transmitted vectors (columns, length m): symbol j on the
//             wire equals X · payload[:, j];
//   recipe  - how the sender computes those symbols from what it holds. The
//             sender's inputs are the symbols it received on the previous hop
//             followed by its own alpha stored symbols, and
//             wire symbols = inputs · recipe.
// Execution only ever applies recipes to stored symbols; payload vectors are
// what the recipes are checked against.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ringstore/algebra.hpp"
#include "ringstore/scheme.hpp"

namespace ringstore {

struct LinkTransfer {
  LinkEnd from;
  LinkEnd to;
  Matrix payload;
  Matrix recipe;

  std::size_t size() const noexcept { return payload.cols(); }
};

struct ReconstructionPlan {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t m = 0;
  std::size_t user_node = 0;
  // From node u+k-1 down to node u, then node u -> user.
  std::vector<LinkTransfer> hops;
  // Decoding basis: every column of nodes u..u+k-2, then gamma columns of
  // node u+k-1.
  std::vector<std::size_t> basis_columns;
  std::uint64_t bandwidth = 0;
};

struct ReconstructionResult {
  RowVector data;
  std::uint64_t bandwidth_used = 0;
};

// Coefficients of the vectors that are eliminated on the way to the
// substituted node, written in the basis chosen around the failed node.
struct ExpressionCoeffs {
  // k >= 2: every column of nodes f..f+k-2, then gamma columns of node
  // f+k-1. k == 1: the m columns of node f+1 that are sent.
  std::vector<std::size_t> basis_columns;
  // k >= 2: the gamma columns sent by node f+k, then the non-basis columns of
  // node f+k-1 (alpha vectors in total). k == 1: the failed node's columns.
  std::vector<std::size_t> extra_columns;
  // Row r expresses extra_columns[r] over basis_columns.
  Matrix coeffs;
};

struct RepairPlan {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t alpha = 0;
  std::size_t m = 0;
  std::size_t failed_node = 0;
  // From node f+k down to node f+1, which delivers to the substituted node.
  std::vector<LinkTransfer> hops;
  ExpressionCoeffs expression_coeffs;
  // The substituted node receives r and stores
  //   row_vec_solve(final_system, r) · final_map.
  // For k >= 2 final_system is the alpha x alpha matrix expressing the last
  // payload over the failed node's own vectors and final_map is identity; for
  // k == 1 final_system is the m x m payload itself and final_map the failed
  // node's generator.
  Matrix final_system;
  Matrix final_map;
  std::uint64_t bandwidth = 0;
};

struct RepairResult {
  RowVector symbols;
  std::uint64_t bandwidth_used = 0;
};

// Throws BadNodeIndex, NotOrdss.
ReconstructionPlan plan_reconstruction(const Scheme& s, std::size_t user_node);

// Throws PlanSchemeMismatch, SingularBasis.
ReconstructionResult execute_reconstruction(const Scheme& s,
                                            const StoredState& st,
                                            const ReconstructionPlan& plan);

// Throws BadNodeIndex, NotOrdss, RingTooShort (n < k+1).
RepairPlan plan_repair(const Scheme& s, std::size_t failed_node);

// Never reads the failed node's own symbols.
// Throws PlanSchemeMismatch, SingularFinalSystem.
RepairResult execute_repair(const Scheme& s, const StoredState& st,
                            const RepairPlan& plan);

// True iff every constrained link of the plan carries at least its minimum
// and no link beyond the constrained ones carries anything. Constraints are
// relative to the plan's user (constraint node 1 = the user's node).
// Throws ContextMismatch if the constraints cannot belong to the plan's
// (n, alpha, m).
bool verify_plan_against_cuts(const ReconstructionPlan& plan,
                              const std::vector<CutConstraint>& constraints);

}  // namespace ringstore
