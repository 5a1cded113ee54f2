#pragma once

#include <cmath>
#include <cstdint>

namespace mdlab {

// Counter-based RNG. Every random draw is a pure function of a 64-bit key
// chain, so independent streams (per sample, per step, per position) can be
// opened anywhere without shared state, and resumed runs replay identical
// randomness.
namespace rng {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t mix(uint64_t a, uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

}  // namespace rng

// Stream tags keep unrelated draws in disjoint key spaces.
enum class RngTag : uint64_t {
  param_init = 1,
  batch_order = 2,
  timestep = 3,
  forward_mask = 4,
  unmask = 5,
  token_draw = 6,
  shuffle = 7,
  general = 8,
};

// Sequential generator over a keyed stream.
class StreamRng {
 public:
  explicit StreamRng(uint64_t key) : key_(key), counter_(0) {}

  StreamRng(uint64_t seed, RngTag tag, uint64_t a = 0, uint64_t b = 0,
            uint64_t c = 0) {
    uint64_t k = rng::splitmix64(seed);
    k = rng::mix(k, static_cast<uint64_t>(tag));
    k = rng::mix(k, a);
    k = rng::mix(k, b);
    k = rng::mix(k, c);
    key_ = k;
    counter_ = 0;
  }

  uint64_t next_u64() { return rng::splitmix64(key_ + 0xd1b54a32d192ed03ull * ++counter_); }

  // Uniform in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller.
  double next_normal() {
    double u1 = next_unit();
    double u2 = next_unit();
    // guard against log(0)
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_;
  uint64_t counter_;
};

// One-shot uniform in [0,1) for a fully specified key. Used where the draw
// must not depend on evaluation order (e.g. per-position unmask decisions).
inline double unit_at(uint64_t seed, RngTag tag, uint64_t a, uint64_t b = 0,
                      uint64_t c = 0) {
  StreamRng r(seed, tag, a, b, c);
  return r.next_unit();
}

}  // namespace mdlab
