#pragma once

#include <cstdint>

namespace cocy {

// Seeding helper; also a decent generator on its own. Public-domain algorithm
// by Sebastiano Vigna.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman & Vigna, public domain). Chosen over std engines
// because its entire output sequence, including our uniform/bernoulli
// mappings below, is identical on every platform. All sampler determinism
// contracts rest on this.
//
// Stream splitting: substream(seed, tag) gives an independent generator per
// (seed, tag) pair by seeding the state from SplitMix64(seed ^ mix(tag)).
// Samplers document their tag layout next to their implementation.
class Xoshiro256pp {
 public:
  Xoshiro256pp(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Fair coin; top output bit.
  bool coin() { return (next() >> 63) != 0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

inline Xoshiro256pp substream(std::uint64_t seed, std::uint64_t tag) {
  return Xoshiro256pp(seed, tag);
}

}  // namespace cocy
