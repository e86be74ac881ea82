#pragma once

#include <cstdint>

#include "cdom/graph.hpp"

namespace cdom {

/// xoshiro256** seeded through splitmix64. Every draw is defined here rather
/// than through <random> distributions, so streams replay bit-exactly on any
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t s_[4];
};

/// Seed for item `index` of a stream, independent of how items are scheduled.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform-ish d-regular graph by the pairing model, restarting on loops and
/// repeated pairs. Throws std::invalid_argument when n*d is odd or d >= n.
Graph random_regular(int n, int d, std::uint64_t seed);

/// Erdos-Renyi G(n, p). Throws std::invalid_argument unless 0 <= p <= 1.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Uniform graph with exactly m edges.
Graph random_gnm(int n, int m, std::uint64_t seed);

}  // namespace cdom
