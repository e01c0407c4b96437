// rng.hpp: seedable random source and the exact discrete samplers built on it.
//
// The engine is std::mt19937_64, so a seed fixes the whole stream on every
// conforming standard library. Doubles are built from the top 53 bits of one
// draw. Binomial variates are exact: direct Bernoulli summation for tiny
// trial counts, otherwise Boost's sampler (inversion for small means, the
// BTRD rejection method of Hormann for large means). No normal approximation
// is ever used.
#pragma once

#include <cstdint>
#include <random>

namespace mixgraph {

class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // Binomial(n, p); p is clamped to [0, 1].
  std::int64_t binomial(std::int64_t n, double p);

  // Number of failures before the first success of Bernoulli(p) trials.
  // Saturates at INT64_MAX when p is so small that the skip overflows.
  std::int64_t geometric_skip(double p);

  engine_type& engine() { return engine_; }

 private:
  engine_type engine_;
};

// Replica seed: splitmix64 finalizer applied to
// master ^ (index * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace mixgraph
