// ks.hpp: Kolmogorov-Smirnov distances and the two-sample test.
#pragma once

#include <cstdint>
#include <map>
#include <span>

namespace mixgraph::stats {

inline constexpr double kNormalizationTolerance = 1e-9;

// max_k |CDF_p(k) - CDF_q(k)| for distributions on the integers. Both inputs
// must carry unit mass within kNormalizationTolerance.
double ks_distance(const std::map<std::int64_t, double>& p, const std::map<std::int64_t, double>& q);

// Complementary Kolmogorov distribution Q(lambda) = 2 sum_j (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

struct KsTest {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Asymptotic two-sample test with Stephens' small-sample correction. Ties are
// handled by evaluating both ECDFs on the pooled support, which makes the test
// conservative for discrete data.
KsTest ks_two_sample(std::span<const double> x, std::span<const double> y);

}  // namespace mixgraph::stats
