// checks.hpp: empirical checks of the increment, moment and concentration results.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mixgraph/core/params.hpp"

namespace mixgraph::stats {

// Limits of P(a_t = 0) -> e^-mu and P(a_t = 1) -> mu e^-mu, and the upper
// bound P(a_t = 0) <= e^-mu. Standard errors use the target probabilities,
// so a tiny window yields wide slack rather than a spurious rejection.
struct IncrementLimitsReport {
  std::int64_t samples = 0;
  double freq0 = 0.0;
  double freq1 = 0.0;
  double target0 = 0.0;
  double target1 = 0.0;
  double dev0 = 0.0;  // |freq0 - target0|
  double dev1 = 0.0;
  double se0 = 0.0;
  double se1 = 0.0;
  bool upper_ok = true;  // freq0 <= e^-mu + 3 se0
};

IncrementLimitsReport increment_limits_check(const std::map<std::int64_t, double>& increment_freq,
                                             std::int64_t samples, const ModelParams& params);

struct MomentVerdict {
  int order = 0;
  double moment = 0.0;
  double bound = 0.0;  // (mu v 1)^k k!
  double std_error = 0.0;
  bool pass = false;
};

struct MomentReport {
  std::int64_t samples = 0;
  double mean = 0.0;
  double mean_se = 0.0;
  bool mean_ok = false;  // |mean - mu| <= 3 se
  std::vector<MomentVerdict> moments;
  bool pass = false;
};

inline constexpr std::int64_t kMinMomentSamples = 1000;

MomentReport moment_bound_check(std::span<const std::int64_t> samples, const ModelParams& params,
                                std::span<const int> orders);
// Same check on a histogram value -> multiplicity.
MomentReport moment_bound_check(const std::map<std::int64_t, std::int64_t>& counts,
                                const ModelParams& params, std::span<const int> orders);

// |e_t - mu t| >= t^{4/5} and |e_t - mu t| >= nu t across replicas, per
// checkpoint. Bounds are Chebyshev with the explicit second-moment bound
// E(e_t - mu t)^2 <= (2 (mu v 1)^2 - mu^2)(t - 1) + (1 - mu)^2.
struct ConcentrationRow {
  std::int64_t t = 0;
  std::int64_t replicas = 0;
  std::int64_t moderate_violations = 0;
  std::int64_t large_violations = 0;
  double moderate_fraction = 0.0;
  double large_fraction = 0.0;
  double moderate_bound = 0.0;
  double large_bound = 0.0;
  bool pass = false;
};

struct ConcentrationReport {
  std::vector<ConcentrationRow> rows;
  bool pass = false;
};

ConcentrationReport concentration_check(const std::map<std::int64_t, std::vector<std::int64_t>>& e_trace,
                                        const ModelParams& params);

}  // namespace mixgraph::stats
