#include "mixgraph/recurrence/master.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mixgraph/recurrence/solve.hpp"

namespace mixgraph::recurrence {

namespace {

constexpr double kNegativeTolerance = 1e-12;
constexpr double kPmfCutoff = 1e-18;

// Fills g[0..kcap] with the forcing at step t and returns the mass above kcap.
double fill_forcing(const MasterForcing& forcing, std::int64_t t, std::int64_t kcap, Sequence& g) {
  std::fill(g.begin(), g.begin() + kcap + 1, 0.0);
  const std::int64_t top = t + 1;
  if (const auto* s = std::get_if<StationaryForcing>(&forcing)) {
    const auto n = static_cast<std::int64_t>(s->phi.size());
    double beyond = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
      const double v = s->phi[static_cast<std::size_t>(k)];
      const std::int64_t target = std::min(k, top);
      if (target <= kcap) {
        g[static_cast<std::size_t>(target)] += v;
      } else {
        beyond += v;
      }
    }
    return beyond;
  }
  if (const auto* b = std::get_if<BinomialArrivals>(&forcing)) {
    const double trials = static_cast<double>(top);
    const double p = std::min(b->rate / trials, 1.0);
    if (p >= 1.0) {
      if (top <= kcap) {
        g[static_cast<std::size_t>(top)] = b->scale;
        return 0.0;
      }
      return b->scale;
    }
    const double odds = p / (1.0 - p);
    double pmf = std::exp(trials * std::log1p(-p));
    double placed = 0.0;
    const double mean = trials * p;
    for (std::int64_t k = 0; k <= std::min(top, kcap); ++k) {
      g[static_cast<std::size_t>(k)] = b->scale * pmf;
      placed += pmf;
      if (static_cast<double>(k) > mean && pmf < kPmfCutoff) break;
      pmf *= (trials - static_cast<double>(k)) / static_cast<double>(k + 1) * odds;
    }
    return top > kcap ? b->scale * std::max(0.0, 1.0 - placed) : 0.0;
  }
  return 0.0;
}

struct Coefficients {
  Family family;
  double alpha;
  double mu;
  double zeta;
  double slope;  // mixed preferential slope

  // (A_k, B_k) at step t.
  std::pair<double, double> at(std::int64_t k, std::int64_t t) const {
    const double kd = static_cast<double>(k);
    double a = 0.0;
    double b = 0.0;
    switch (family) {
      case Family::PureBa:
        a = (kd - 1.0) / 2.0;
        b = kd / 2.0;
        break;
      case Family::Mixed:
        a = slope * (kd - 1.0) + (1.0 - alpha) * zeta;
        b = slope * kd + (1.0 - alpha) * zeta;
        break;
      case Family::Classical:
        a = b = zeta;
        break;
      case Family::HardCopy:
        a = b = alpha * (kd - 1.0) + (1.0 - alpha) * std::min(mu, static_cast<double>(t + 1));
        break;
      case Family::PureCopy:
        a = b = kd - 1.0;
        break;
    }
    return {k == 0 ? 0.0 : a, b};
  }

  double denominator(std::int64_t t) const {
    return family == Family::PureBa || family == Family::Mixed ? static_cast<double>(t)
                                                               : static_cast<double>(t + 1);
  }
};

}  // namespace

MasterForcing natural_forcing(Family family, const ModelParams& params) {
  switch (family) {
    case Family::Classical: return BinomialArrivals{1.0, params.zeta()};
    case Family::HardCopy: return BinomialArrivals{1.0 - params.alpha(), params.mu()};
    case Family::PureCopy: return NoForcing{};
    case Family::PureBa:
    case Family::Mixed: break;
  }
  throw std::invalid_argument(std::string(to_string(family)) +
                              " has no closed-form arrival law; supply a stationary forcing");
}

double MasterTrajectory::total() const {
  return std::accumulate(final_counts.begin(), final_counts.end(), 0.0);
}

MasterTrajectory evolve_master(Family family, const ModelParams& params, const MasterForcing& forcing,
                               std::int64_t steps, std::int64_t k_max,
                               const std::vector<std::int64_t>& snapshot_times) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (family == Family::Mixed && !(params.alpha() > 0.0 && params.alpha() < 1.0)) {
    throw std::invalid_argument("mixed family needs 0 < alpha < 1");
  }
  if (const auto* b = std::get_if<BinomialArrivals>(&forcing); b && !(b->rate > 0.0 && b->scale >= 0.0)) {
    throw std::invalid_argument("binomial arrivals need rate > 0 and scale >= 0");
  }

  const Coefficients coef{family, params.alpha(), params.mu(), params.zeta(),
                          params.xi() > 0.0 ? params.alpha() * params.mu() / (2.0 * params.xi()) : 0.0};

  MasterTrajectory traj;
  traj.family = family;
  traj.steps = steps;
  traj.k_max = k_max;
  Sequence d(static_cast<std::size_t>(k_max) + 1, 0.0);

  std::int64_t t = 1;
  if (family == Family::Classical) {
    t = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(params.zeta() - 1.0)));
  }
  t = std::min(t, steps);
  if (t <= k_max) {
    d[static_cast<std::size_t>(t)] = static_cast<double>(t + 1);
  } else {
    traj.truncated_mass = static_cast<double>(t + 1);
  }

  std::vector<std::int64_t> wanted(snapshot_times);
  std::sort(wanted.begin(), wanted.end());
  auto next_snapshot = wanted.begin();
  auto take_snapshots = [&](std::int64_t now) {
    while (next_snapshot != wanted.end() && *next_snapshot <= now) {
      if (*next_snapshot == now) traj.snapshots[now] = d;
      ++next_snapshot;
    }
  };
  take_snapshots(t);

  Sequence g(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (; t < steps; ++t) {
    const std::int64_t kcap = std::min(t + 1, k_max);
    traj.truncated_mass += fill_forcing(forcing, t, kcap, g);
    const double den = coef.denominator(t);
    if (kcap == k_max) {
      traj.truncated_mass += coef.at(k_max + 1, t).first * d[static_cast<std::size_t>(k_max)] / den;
    }
    for (std::int64_t k = kcap; k >= 0; --k) {
      const auto i = static_cast<std::size_t>(k);
      const auto [a, b] = coef.at(k, t);
      const double below = k > 0 ? d[i - 1] : 0.0;
      double v = d[i] + (a * below - b * d[i]) / den + g[i];
      if (!std::isfinite(v)) throw RecurrenceError("non-finite expected count at t = " + std::to_string(t), k);
      if (v < 0.0) {
        if (v < -kNegativeTolerance) {
          throw RecurrenceError("negative expected count " + std::to_string(v) + " at t = " +
                                    std::to_string(t) + "; coefficients are mis-set",
                                k);
        }
        v = 0.0;
      }
      d[i] = v;
    }
    take_snapshots(t + 1);
  }
  traj.final_counts = std::move(d);
  return traj;
}

}  // namespace mixgraph::recurrence
