#pragma once

#include <cstdint>

namespace tapsp {

/// SplitMix64 stream. Bit-identical on every platform; all sampling in the library
/// goes through this type so a seed fully determines a run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  std::uint64_t seed() const { return seed_; }

  /// Independent child seed for stream `stream` of `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace tapsp
