#pragma once

#include <cstdint>

namespace ringstore {

// 64-bit linear congruential stream. Each draw advances the state and yields
// its high 32 bits, so a given seed reproduces the same sequence everywhere.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  std::uint32_t next_mod(std::uint32_t modulus) noexcept { return next() % modulus; }

 private:
  std::uint64_t state_;
};

}  // namespace ringstore
