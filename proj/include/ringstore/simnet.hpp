#pragma once

// Synchronous simulator of the ring: holds one encoded data set, runs
// reconstruction and repair plans against it hop by hop, and keeps symbol
// counts per directed link. Not thread-safe; distinct instances are
// independent.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ringstore/protocol.hpp"
#include "ringstore/scheme.hpp"

namespace ringstore {

struct Link {
  LinkEnd from;
  LinkEnd to;

  friend auto operator<=>(const Link&, const Link&) = default;
};

struct Event {
  enum class Kind { Encode, UserRead, Fail, Repair };

  Kind kind = Kind::Encode;
  // Node for Fail/Repair, user index for UserRead, 0 for Encode.
  std::size_t node_or_user = 0;
  std::uint64_t bandwidth = 0;
  bool success = false;

  friend bool operator==(const Event&, const Event&) = default;
};

std::string_view to_string(Event::Kind kind);

struct SimStats {
  std::map<Link, std::uint64_t> per_link;
  std::map<Event::Kind, std::uint64_t> per_kind;
  std::size_t event_count = 0;
};

class RingSim {
 public:
  // Draws X from Lcg64(seed) and encodes it. Throws NotOrdss.
  RingSim(Scheme scheme, std::uint64_t seed);

  // Reconstructs X for the user attached to `user` and checks it against the
  // encoded data. Throws BadUserIndex, PathBlockedByFailure.
  Event user_read(std::size_t user);

  // Marks a node failed and drops its symbols. Throws BadNodeIndex,
  // AnotherNodeFailed.
  Event fail(std::size_t node);

  // Rebuilds the failed node from its upstream helpers and installs the
  // result in the substituted node. Throws NoFailedNode, RingTooShort,
  // PathBlockedByFailure.
  Event repair();

  // fail(node) followed by repair(); returns the repair event.
  Event fail_and_repair(std::size_t node);

  SimStats stats() const;

  const Scheme& scheme() const noexcept { return scheme_; }
  const RowVector& original_x() const noexcept { return original_x_; }
  const StoredState& state() const noexcept { return state_; }
  const std::vector<Event>& event_log() const noexcept { return log_; }
  const std::map<Link, std::uint64_t>& link_counters() const noexcept {
    return counters_;
  }
  std::optional<std::size_t> failed_node() const noexcept { return failed_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  void require_alive(std::size_t node, std::string_view why) const;
  void charge(const std::vector<LinkTransfer>& hops);

  Scheme scheme_;
  std::uint64_t seed_;
  RowVector original_x_;
  StoredState state_;
  StoredState pristine_;
  std::optional<std::size_t> failed_;
  std::map<Link, std::uint64_t> counters_;
  std::vector<Event> log_;
};

RingSim sim_new(Scheme s, std::uint64_t seed);
Event sim_user_read(RingSim& sim, std::size_t user);
Event sim_fail_and_repair(RingSim& sim, std::size_t node);
SimStats sim_stats(const RingSim& sim);

}  // namespace ringstore
