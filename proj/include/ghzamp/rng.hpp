#pragma once

#include <cstdint>

namespace ghzamp {

// splitmix64. Deterministic across platforms, cheap to fork into per-trial
// streams, and good enough statistically for protocol sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // k uniform bits, taken from the high end of the word.
  std::uint32_t bits(int k) {
    return static_cast<std::uint32_t>(next() >> (64 - k));
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent stream for trial `stream` under a base seed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xd1342543de82ef95ull * (stream + 1)));
    r.next();
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace ghzamp
