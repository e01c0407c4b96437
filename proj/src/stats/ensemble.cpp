#include "mixgraph/stats/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mixgraph::stats {

Spread spread_of(std::span<const double> values) {
  Spread s;
  if (values.empty()) return s;
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

EnsembleSummary summarize(std::span<const TrajectorySummary> runs) {
  if (runs.empty()) throw std::invalid_argument("cannot summarise an empty ensemble");
  EnsembleSummary out;
  out.replicas = static_cast<std::int64_t>(runs.size());
  out.steps = runs.front().steps;
  const double T = static_cast<double>(out.steps);
  const double R = static_cast<double>(out.replicas);

  std::map<std::int64_t, double> sum;
  std::map<std::int64_t, double> sum_sq;
  for (const TrajectorySummary& run : runs) {
    if (run.steps != out.steps) throw std::invalid_argument("replicas disagree on step count");
    for (const auto& [k, n] : run.final_counts) {
      const double f = static_cast<double>(n) / T;
      sum[k] += f;
      sum_sq[k] += f * f;
    }
    for (const auto& [a, n] : run.increment_counts) {
      out.increment_counts[a] += n;
      out.increment_samples += n;
    }
    for (const CheckpointRecord& c : run.checkpoints) {
      out.e_by_checkpoint[c.t].push_back(c.edge_count);
    }
    out.final_edges.push_back(run.final_edge_count);
    out.isolated.push_back(run.isolated());
    out.max_degree.push_back(run.final_max_degree);
    const double from_isolated = 1.0 - static_cast<double>(run.isolated()) / (T + 1.0);
    out.giant_from_isolated.push_back(from_isolated);
    out.giant.push_back(run.giant_fraction.value_or(from_isolated));
    if (run.cohort) out.cohorts.push_back(*run.cohort);
  }

  for (const auto& [k, s] : sum) {
    const double mean = s / R;
    out.mean_fraction[k] = mean;
    out.mean_count[k] = mean * T;
    if (out.replicas > 1) {
      const double var = std::max(0.0, (sum_sq[k] - R * mean * mean) / (R - 1.0));
      out.ci_half[k] = 1.96 * std::sqrt(var / R);
    } else {
      out.ci_half[k] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  for (const auto& [a, n] : out.increment_counts) {
    out.increment_freq[a] = static_cast<double>(n) / static_cast<double>(out.increment_samples);
  }
  for (const auto& [t, values] : out.e_by_checkpoint) {
    std::vector<double> v(values.begin(), values.end());
    out.e_trace[t] = spread_of(v);
  }
  out.giant_stats = spread_of(out.giant);
  return out;
}

std::map<std::int64_t, double> normalized(const std::map<std::int64_t, double>& p) {
  double total = 0.0;
  for (const auto& [k, v] : p) total += v;
  if (!(total > 0.0)) throw std::invalid_argument("cannot normalise a distribution with no mass");
  std::map<std::int64_t, double> out;
  for (const auto& [k, v] : p) out[k] = v / total;
  return out;
}

}  // namespace mixgraph::stats
