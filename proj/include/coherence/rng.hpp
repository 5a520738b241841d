#pragma once

#include <cstdint>
#include <random>

namespace coherence {

/// Seedable generator with independent, reproducible substreams.
///
/// A stream is identified by (seed, stream index). Streams are derived by
/// SplitMix64 mixing, so stream k of seed s is the same regardless of how
/// many other streams were drawn before it, or on which thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace coherence
