// master.hpp: forward-in-time evolution of the expected degree counts.
#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "mixgraph/recurrence/spec.hpp"

namespace mixgraph::recurrence {

// Source term g_k(t) added to class k between t and t + 1.
struct StationaryForcing {
  // phi_k for k <= t + 1; mass beyond t + 1 lands in class t + 1, since the
  // new vertex can have at most t + 1 neighbours.
  Sequence phi;
};
struct BinomialArrivals {
  // scale * P(Binomial(t + 1, min(rate / (t + 1), 1)) = k).
  double scale = 1.0;
  double rate = 1.0;
};
struct NoForcing {};
using MasterForcing = std::variant<StationaryForcing, BinomialArrivals, NoForcing>;

// The forcing the family itself implies: binomial arrivals of the classical
// manner for Classical and HardCopy, none for PureCopy. PureBa and Mixed have
// no closed-form arrival law and throw.
MasterForcing natural_forcing(Family family, const ModelParams& params);

struct MasterTrajectory {
  Family family = Family::PureBa;
  std::int64_t steps = 0;
  std::int64_t k_max = 0;
  Sequence final_counts;                       // D_k(T), k = 0..k_max
  std::map<std::int64_t, Sequence> snapshots;  // D_k(t) at requested t
  double truncated_mass = 0.0;                 // mass that left through k_max

  double total() const;
};

// D_k(t+1) = D_k(t) + (A_k(t) D_{k-1}(t) - B_k(t) D_k(t)) / den(t) + g_k(t)
// for 0 <= k <= t + 1, D_k(t) = 0 for k > t, with
//   PureBa, Mixed    den = t,     A, B from the stationary preset, start D_1(1) = 2
//   Classical        den = t + 1, A = B = zeta, start at t0 = max(1, ceil(zeta - 1))
//                    from the complete graph D_{t0}(t0) = t0 + 1
//   HardCopy         den = t + 1, A_k = B_k = alpha(k-1) + (1-alpha) min(mu, t + 1)
//   PureCopy         den = t + 1, A_k = B_k = k - 1
// The remainder term is dropped. Throws when a value falls below -1e-12.
MasterTrajectory evolve_master(Family family, const ModelParams& params, const MasterForcing& forcing,
                               std::int64_t steps, std::int64_t k_max,
                               const std::vector<std::int64_t>& snapshot_times = {});

}  // namespace mixgraph::recurrence
