#ifndef K4PERC_RNG_HPP
#define K4PERC_RNG_HPP

#include <cstdint>

namespace k4perc {

// Platform-independent random bits. The generator contract, fixed for all
// time so that experiment outputs can be reproduced from (config, seed)
// alone:
//
//   * seeding: four iterates of splitmix64 starting from the user seed
//     initialize the xoshiro256** state;
//   * stream: xoshiro256** 1.0 (Blackman/Vigna);
//   * uniform doubles take the top 53 bits: (x >> 11) * 2^-53.
//
// No standard-library engine is used anywhere in the library.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0,1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1]; safe as a log() argument.
  double next_double_open() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Seed derivation for independent sub-streams (one per experiment trial).
// Each index is absorbed through one splitmix64 step so that nearby
// (master, a, b) triples give unrelated streams:
//
//   s = master; s' = splitmix64(s ^ (a+1)*GAMMA); out = splitmix64(s' ^ (b+1)*GAMMA)
//
// where GAMMA = 0x9E3779B97F4A7C15 and splitmix64(x) advances from state x.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t s = master ^ ((a + 1) * kGamma);
  std::uint64_t mixed = splitmix64_next(s);
  s = mixed ^ ((b + 1) * kGamma);
  return splitmix64_next(s);
}

}  // namespace k4perc

#endif  // K4PERC_RNG_HPP
