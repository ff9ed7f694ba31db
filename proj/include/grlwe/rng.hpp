#ifndef GRLWE_RNG_HPP
#define GRLWE_RNG_HPP

#include <array>
#include <cstdint>

namespace grlwe {

/**
 * Deterministic random stream: a 64-bit seed is expanded by splitmix64 into
 * the state of xoshiro256**. The same seed always yields the same byte-exact
 * stream on every platform; the library never touches OS entropy.
 */
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  /// Unbiased draw from [0, bound) by rejection; bound > 0.
  uint32_t uniform_below(uint32_t bound);

  /// 53-bit uniform in [0, 1).
  double uniform_unit();

  /// N(0, sigma^2) via Box-Muller on two fresh uniforms.
  double gaussian(double sigma);

  /// Split off an independently seeded stream (for per-shard use).
  Rng fork();

 private:
  std::array<uint64_t, 4> state_;
};

}  // namespace grlwe

#endif
