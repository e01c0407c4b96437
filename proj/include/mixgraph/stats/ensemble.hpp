// ensemble.hpp: aggregation of replica trajectories into ensemble observables.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mixgraph/core/trajectory.hpp"

namespace mixgraph::stats {

struct Spread {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single value
  double min = 0.0;
  double max = 0.0;
};

Spread spread_of(std::span<const double> values);

struct EnsembleSummary {
  std::int64_t replicas = 0;
  std::int64_t steps = 0;

  std::map<std::int64_t, double> mean_count;     // mean D_k(T)
  std::map<std::int64_t, double> mean_fraction;  // mean D_k(T) / T
  std::map<std::int64_t, double> ci_half;        // 1.96 * sd / sqrt(R) of D_k(T) / T; NaN when R = 1

  std::map<std::int64_t, std::int64_t> increment_counts;  // pooled over replicas
  std::int64_t increment_samples = 0;
  std::map<std::int64_t, double> increment_freq;

  std::map<std::int64_t, Spread> e_trace;
  std::map<std::int64_t, std::vector<std::int64_t>> e_by_checkpoint;  // per replica, index order

  std::vector<std::int64_t> final_edges;
  std::vector<std::int64_t> isolated;
  std::vector<std::int64_t> max_degree;
  // Union-find giant fraction when the vertex backend ran, else 1 - D_0 / (T + 1).
  std::vector<double> giant;
  std::vector<double> giant_from_isolated;
  Spread giant_stats;
  std::vector<CohortSummary> cohorts;
};

// Replicas must share the same step count; aggregation follows span order.
EnsembleSummary summarize(std::span<const TrajectorySummary> runs);

// p normalised to unit mass.
std::map<std::int64_t, double> normalized(const std::map<std::int64_t, double>& p);

}  // namespace mixgraph::stats
