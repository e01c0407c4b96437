#include "mixgraph/stats/checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mixgraph::stats {

namespace {

double lookup(const std::map<std::int64_t, double>& m, std::int64_t k) {
  auto it = m.find(k);
  return it == m.end() ? 0.0 : it->second;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Weighted sample of (value, multiplicity) pairs.
template <class Visit>
MomentReport moments_from(Visit visit, double n, const ModelParams& params, std::span<const int> orders) {
  if (n < static_cast<double>(kMinMomentSamples)) {
    throw std::invalid_argument("moment check needs at least " + std::to_string(kMinMomentSamples) +
                                " samples");
  }
  MomentReport report;
  report.samples = static_cast<std::int64_t>(n);
  const double mu = params.mu();

  auto raw_moment = [&](int order) {
    double s = 0.0;
    visit([&](double value, double weight) { s += weight * std::pow(value, order); });
    return s / n;
  };

  report.mean = raw_moment(1);
  const double var1 = std::max(0.0, raw_moment(2) - report.mean * report.mean);
  report.mean_se = std::sqrt(var1 / n);
  report.mean_ok = std::abs(report.mean - mu) <= 3.0 * report.mean_se;

  report.pass = report.mean_ok;
  for (int order : orders) {
    if (order < 1) throw std::invalid_argument("moment order must be positive");
    MomentVerdict v;
    v.order = order;
    v.moment = raw_moment(order);
    const double var = std::max(0.0, raw_moment(2 * order) - v.moment * v.moment);
    v.std_error = std::sqrt(var / n);
    v.bound = std::pow(std::max(mu, 1.0), order) * factorial(order);
    v.pass = v.moment <= v.bound + 3.0 * v.std_error;
    report.pass = report.pass && v.pass;
    report.moments.push_back(v);
  }
  return report;
}

}  // namespace

IncrementLimitsReport increment_limits_check(const std::map<std::int64_t, double>& increment_freq,
                                             std::int64_t samples, const ModelParams& params) {
  if (samples < 1) throw std::invalid_argument("increment window is empty");
  IncrementLimitsReport r;
  r.samples = samples;
  const double mu = params.mu();
  r.freq0 = lookup(increment_freq, 0);
  r.freq1 = lookup(increment_freq, 1);
  r.target0 = std::exp(-mu);
  r.target1 = mu * std::exp(-mu);
  r.dev0 = std::abs(r.freq0 - r.target0);
  r.dev1 = std::abs(r.freq1 - r.target1);
  const double n = static_cast<double>(samples);
  r.se0 = std::sqrt(r.target0 * (1.0 - r.target0) / n);
  r.se1 = std::sqrt(r.target1 * (1.0 - r.target1) / n);
  r.upper_ok = r.freq0 <= r.target0 + 3.0 * r.se0;
  return r;
}

MomentReport moment_bound_check(std::span<const std::int64_t> samples, const ModelParams& params,
                                std::span<const int> orders) {
  auto visit = [samples](auto&& f) {
    for (std::int64_t a : samples) f(static_cast<double>(a), 1.0);
  };
  return moments_from(visit, static_cast<double>(samples.size()), params, orders);
}

MomentReport moment_bound_check(const std::map<std::int64_t, std::int64_t>& counts,
                                const ModelParams& params, std::span<const int> orders) {
  double n = 0.0;
  for (const auto& [value, mult] : counts) n += static_cast<double>(mult);
  auto visit = [&counts](auto&& f) {
    for (const auto& [value, mult] : counts) f(static_cast<double>(value), static_cast<double>(mult));
  };
  return moments_from(visit, n, params, orders);
}

ConcentrationReport concentration_check(const std::map<std::int64_t, std::vector<std::int64_t>>& e_trace,
                                        const ModelParams& params) {
  if (e_trace.size() < 2) throw std::invalid_argument("concentration check needs at least two checkpoints");
  const double mu = params.mu();
  const double nu = params.nu();
  const double m1 = std::max(mu, 1.0);
  ConcentrationReport report;
  report.pass = true;
  for (const auto& [t_int, values] : e_trace) {
    if (values.empty()) throw std::invalid_argument("checkpoint without replicas");
    const double t = static_cast<double>(t_int);
    ConcentrationRow row;
    row.t = t_int;
    row.replicas = static_cast<std::int64_t>(values.size());
    const double moderate = std::pow(t, 0.8);
    const double large = nu * t;
    for (std::int64_t e : values) {
      const double dev = std::abs(static_cast<double>(e) - mu * t);
      if (dev >= moderate) ++row.moderate_violations;
      if (dev >= large) ++row.large_violations;
    }
    const double r = static_cast<double>(row.replicas);
    row.moderate_fraction = static_cast<double>(row.moderate_violations) / r;
    row.large_fraction = static_cast<double>(row.large_violations) / r;
    const double second_moment = (2.0 * m1 * m1 - mu * mu) * (t - 1.0) + (1.0 - mu) * (1.0 - mu);
    row.moderate_bound = std::min(1.0, second_moment / std::pow(t, 1.6));
    row.large_bound = std::min(1.0, second_moment / (large * large));
    row.pass = row.moderate_fraction <= row.moderate_bound && row.large_fraction <= row.large_bound;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace mixgraph::stats
