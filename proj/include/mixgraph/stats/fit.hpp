// fit.hpp: tail exponent and geometric ratio estimators.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>

namespace mixgraph::stats {

class InsufficientDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum number of positive classes a least-squares fit accepts.
inline constexpr std::int64_t kMinFitClasses = 10;

struct TailFit {
  double exponent = 0.0;  // beta > 0 in f_k ~ k^-beta
  double std_error = 0.0;
  std::int64_t points = 0;
};

struct RatioFit {
  double ratio = 0.0;  // r in f_k ~ r^k
  double std_error = 0.0;  // standard error of log r
  std::int64_t points = 0;
};

// Least-squares slope of log f_k against log k over k_lo <= k <= k_hi,
// skipping classes with no mass.
TailFit fit_power_tail(const std::map<std::int64_t, double>& fraction, std::int64_t k_lo,
                       std::int64_t k_hi);
// Same, for a dense sequence indexed by k.
TailFit fit_power_tail(std::span<const double> sequence, std::int64_t k_lo, std::int64_t k_hi);

// Discrete maximum-likelihood tail index over raw degrees >= k_min, using the
// continuous approximation with the k_min - 1/2 offset.
TailFit fit_power_tail_mle(const std::map<std::int64_t, std::int64_t>& degree_counts,
                           std::int64_t k_min);

// Least-squares slope of log f_k against k, exponentiated.
RatioFit fit_geometric_ratio(const std::map<std::int64_t, double>& fraction, std::int64_t k_lo,
                             std::int64_t k_hi);
RatioFit fit_geometric_ratio(std::span<const double> sequence, std::int64_t k_lo, std::int64_t k_hi);

}  // namespace mixgraph::stats
