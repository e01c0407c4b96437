// solve.hpp: stationary recurrence solutions, tail descriptors and the comparing sandwich.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixgraph/recurrence/spec.hpp"

namespace mixgraph::recurrence {

// Raised when a coefficient or solved value stops being finite, or when
// 1 + B_k <= 0 leaves no stationary solution. Names the offending k.
class RecurrenceError : public std::runtime_error {
 public:
  RecurrenceError(const std::string& what, std::int64_t k)
      : std::runtime_error(what + " at k = " + std::to_string(k)), k_(k) {}
  std::int64_t k() const { return k_; }

 private:
  std::int64_t k_;
};

struct RecurrenceSolution {
  Sequence d;  // expected vertex fraction per degree class
  std::int64_t k_max = 0;
  std::optional<double> fitted_exponent;
  std::optional<double> fitted_ratio;

  double at(std::int64_t k) const {
    return k < 0 || k > k_max ? 0.0 : d[static_cast<std::size_t>(k)];
  }
};

// d_k = (A_k d_{k-1} + phi_k) / (1 + B_k), ascending k.
RecurrenceSolution solve_forward(const RecurrenceSpec& spec);

// d_k = sum_{j<=k} 2 j (j+1) phi_j / (k (k+1) (k+2)) for k >= 1, d_0 = phi_0,
// through a compensated running prefix sum. k_max >= 2.
RecurrenceSolution closed_form_pure_ba(const Sequence& forcing, std::int64_t k_max);

// Product form with beta = 1 + 2/alpha, b = 2/alpha + 2(1-alpha) mu / alpha,
// evaluated in log space. Needs 0 < alpha < 1 and mu = zeta.
RecurrenceSolution closed_form_mixed(const Sequence& forcing, const ModelParams& params,
                                     std::int64_t k_max);

// Fills the fitted exponent (power-law families, k in [100, 1000] clipped to
// k_max) or the fitted ratio (classical). Leaves both empty when the window
// holds too few positive entries.
void attach_tail_fit(RecurrenceSolution& solution, Family family, const ModelParams& params);

// d_{factor k} / d_k, or NaN when d_k = 0 or factor k is past k_max.
double tail_ratio(const RecurrenceSolution& solution, std::int64_t k, std::int64_t factor = 2);

struct TailDescriptor {
  enum class Kind { PowerLaw, Geometric, Degenerate };
  Kind kind = Kind::Degenerate;
  double value = 0.0;  // beta for PowerLaw, ratio for Geometric

  // Limit of d_{2k}/d_k (PowerLaw) or d_{k+1}/d_k (Geometric).
  double limiting_ratio() const;
};

// PureBa: k^-3. Mixed: beta = 1 + 2(1 + (1-alpha) zeta / (alpha mu)).
// Classical: ratio zeta / (1 + zeta). HardCopy: beta = 1/alpha. PureCopy: degenerate.
TailDescriptor predicted_exponent(Family family, const ModelParams& params);

struct SandwichRow {
  std::int64_t k = 0;
  double lower = 0.0;
  double upper = 0.0;
  double empirical = 0.0;
  bool lower_ok = false;  // lower - slack <= empirical
  bool upper_ok = false;  // empirical <= upper + slack
};

// Rows over the common k range of the three sequences.
std::vector<SandwichRow> comparing_sandwich(const RecurrenceSolution& lower,
                                            const RecurrenceSolution& upper,
                                            const Sequence& empirical, double slack);

// Deviation scale M T^{-1/5} of the time-dependent solution around T d_k, per vertex.
double sandwich_slack(double m, std::int64_t steps);

}  // namespace mixgraph::recurrence
