#include "mixgraph/core/rng.hpp"

#include <boost/random/binomial_distribution.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixgraph {

namespace {

constexpr std::int64_t kDirectBernoulliLimit = 16;

std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below requires n > 0");
  // Lemire's multiply-shift with rejection of the biased low region.
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    __extension__ using u128 = unsigned __int128;
    const u128 m = static_cast<u128>(engine_()) * n;
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

std::int64_t Rng::binomial(std::int64_t n, double p) {
  if (n <= 0 || !(p > 0.0)) return 0;
  if (p >= 1.0) return n;
  if (n <= kDirectBernoulliLimit) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < n; ++i) hits += uniform() < p ? 1 : 0;
    return hits;
  }
  boost::random::binomial_distribution<std::int64_t, double> dist(n, p);
  return dist(engine_);
}

std::int64_t Rng::geometric_skip(double p) {
  if (p >= 1.0) return 0;
  if (!(p > 0.0)) return std::numeric_limits<std::int64_t>::max();
  const double u = 1.0 - uniform();  // (0, 1]
  const double skip = std::floor(std::log(u) / std::log1p(-p));
  if (!(skip < 9.0e18)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(skip);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_finalize(master ^ (index * 0x9E3779B97F4A7C15ULL));
}

}  // namespace mixgraph
