#include "ringstore/simnet.hpp"

#include <string>
#include <utility>

#include "ringstore/errors.hpp"
#include "ringstore/prng.hpp"

namespace ringstore {

namespace {

RowVector random_data(const Scheme& s, std::uint64_t seed) {
  Lcg64 rng(seed);
  RowVector x(s.m());
  for (auto& v : x) v = rng.next_mod(s.field().p());
  return x;
}

}  // namespace

std::string_view to_string(Event::Kind kind) {
  switch (kind) {
    case Event::Kind::Encode: return "Encode";
    case Event::Kind::UserRead: return "UserRead";
    case Event::Kind::Fail: return "Fail";
    case Event::Kind::Repair: return "Repair";
  }
  return "Unknown";
}

RingSim::RingSim(Scheme scheme, std::uint64_t seed)
    : scheme_(std::move(scheme)), seed_(seed) {
  if (!validate_ordss(scheme_).is_ordss) {
    throw Error(ErrorCode::NotOrdss, "simulator needs an optimal scheme");
  }
  original_x_ = random_data(scheme_, seed_);
  state_ = encode(scheme_, original_x_);
  pristine_ = state_;
  log_.push_back({Event::Kind::Encode, 0, 0, true});
}

void RingSim::require_alive(std::size_t node, std::string_view why) const {
  if (failed_ && *failed_ == node) {
    throw Error(ErrorCode::PathBlockedByFailure,
                std::string(why) + " passes through failed node " +
                    std::to_string(node));
  }
}

void RingSim::charge(const std::vector<LinkTransfer>& hops) {
  for (const auto& hop : hops) counters_[{hop.from, hop.to}] += hop.size();
}

Event RingSim::user_read(std::size_t user) {
  if (user < 1 || user > scheme_.n()) {
    throw Error(ErrorCode::BadUserIndex,
                "user " + std::to_string(user) + " not in 1.." +
                    std::to_string(scheme_.n()));
  }
  for (std::size_t i = 0; i < scheme_.k(); ++i) {
    require_alive(scheme_.upstream(user, i), "reconstruction path");
  }
  const auto plan = plan_reconstruction(scheme_, user);
  const auto result = execute_reconstruction(scheme_, state_, plan);
  if (result.data != original_x_) {
    throw Error(ErrorCode::InvariantViolation,
                "user " + std::to_string(user) + " decoded the wrong data");
  }
  charge(plan.hops);
  Event ev{Event::Kind::UserRead, user, result.bandwidth_used, true};
  log_.push_back(ev);
  return ev;
}

Event RingSim::fail(std::size_t node) {
  if (node < 1 || node > scheme_.n()) {
    throw Error(ErrorCode::BadNodeIndex,
                "node " + std::to_string(node) + " not in 1.." +
                    std::to_string(scheme_.n()));
  }
  if (failed_) {
    throw Error(ErrorCode::AnotherNodeFailed,
                "node " + std::to_string(*failed_) + " is already failed");
  }
  failed_ = node;
  state_.symbols[node - 1].clear();
  Event ev{Event::Kind::Fail, node, 0, true};
  log_.push_back(ev);
  return ev;
}

Event RingSim::repair() {
  if (!failed_) throw Error(ErrorCode::NoFailedNode, "no node is failed");
  const std::size_t node = *failed_;
  const auto plan = plan_repair(scheme_, node);
  const auto result = execute_repair(scheme_, state_, plan);
  if (result.symbols != pristine_.symbols[node - 1]) {
    throw Error(ErrorCode::InvariantViolation,
                "substituted node " + std::to_string(node) +
                    " differs from the failed one");
  }
  charge(plan.hops);
  state_.symbols[node - 1] = result.symbols;
  failed_.reset();
  Event ev{Event::Kind::Repair, node, result.bandwidth_used, true};
  log_.push_back(ev);
  return ev;
}

Event RingSim::fail_and_repair(std::size_t node) {
  if (!failed_ && node >= 1 && node <= scheme_.n()) {
    // Surface RingTooShort before the node is marked failed.
    plan_repair(scheme_, node);
  }
  fail(node);
  return repair();
}

SimStats RingSim::stats() const {
  SimStats out;
  out.per_link = counters_;
  for (const auto& ev : log_) out.per_kind[ev.kind] += ev.bandwidth;
  out.event_count = log_.size();
  return out;
}

RingSim sim_new(Scheme s, std::uint64_t seed) { return RingSim(std::move(s), seed); }

Event sim_user_read(RingSim& sim, std::size_t user) { return sim.user_read(user); }

Event sim_fail_and_repair(RingSim& sim, std::size_t node) {
  return sim.fail_and_repair(node);
}

SimStats sim_stats(const RingSim& sim) { return sim.stats(); }

}  // namespace ringstore
