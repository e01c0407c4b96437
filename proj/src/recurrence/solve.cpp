#include "mixgraph/recurrence/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mixgraph/stats/fit.hpp"

namespace mixgraph::recurrence {

namespace {

void require_finite(double v, const char* what, std::int64_t k) {
  if (!std::isfinite(v)) throw RecurrenceError(std::string(what) + " is not finite", k);
}

double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double forcing_at(const Sequence& forcing, std::int64_t k) {
  return k < static_cast<std::int64_t>(forcing.size()) ? forcing[static_cast<std::size_t>(k)] : 0.0;
}

}  // namespace

RecurrenceSolution solve_forward(const RecurrenceSpec& spec) {
  const std::int64_t k_max = spec.k_max();
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  RecurrenceSolution sol;
  sol.k_max = k_max;
  sol.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  double prev = 0.0;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double a = spec.gain[i];
    const double b = spec.loss[i];
    const double phi = forcing_at(spec.forcing, k);
    require_finite(a, "gain coefficient", k);
    require_finite(b, "loss coefficient", k);
    if (!(1.0 + b > 0.0)) throw RecurrenceError("1 + B_k <= 0, no stationary solution", k);
    const double d = (a * prev + phi) / (1.0 + b);
    require_finite(d, "solution", k);
    if (d < 0.0) throw RecurrenceError("negative solution value", k);
    sol.d[i] = d;
    prev = d;
  }
  return sol;
}

RecurrenceSolution closed_form_pure_ba(const Sequence& forcing, std::int64_t k_max) {
  if (k_max < 2) throw std::invalid_argument("closed_form_pure_ba needs k_max >= 2");
  RecurrenceSolution sol;
  sol.k_max = k_max;
  sol.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  sol.d[0] = forcing_at(forcing, 0);
  // Neumaier summation of 2 j (j+1) phi_j.
  double sum = 0.0;
  double carry = 0.0;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    const double term = 2.0 * kd * (kd + 1.0) * forcing_at(forcing, k);
    const double next = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
    const double d = (sum + carry) / (kd * (kd + 1.0) * (kd + 2.0));
    require_finite(d, "solution", k);
    sol.d[static_cast<std::size_t>(k)] = d;
  }
  return sol;
}

RecurrenceSolution closed_form_mixed(const Sequence& forcing, const ModelParams& params,
                                     std::int64_t k_max) {
  const double alpha = params.alpha();
  const double mu = params.mu();
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("closed_form_mixed needs 0 < alpha < 1");
  if (mu != params.zeta()) {
    throw std::invalid_argument("closed_form_mixed needs mu = zeta; use solve_forward with the general preset");
  }
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const double beta = 1.0 + 2.0 / alpha;
  const double b = 2.0 / alpha + 2.0 * (1.0 - alpha) * mu / alpha;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  RecurrenceSolution sol;
  sol.k_max = k_max;
  sol.d.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  const double phi0 = forcing_at(forcing, 0);
  sol.d[0] = 2.0 / (b * alpha) * phi0;

  // log P_k = sum_{j<=k} log(1 - beta/(j+b)); log S_k = log of the bracketed sum.
  double log_p = 0.0;
  double log_s = phi0 > 0.0 ? std::log(sol.d[0]) : kNegInf;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const double kb = static_cast<double>(k) + b;
    log_p += std::log1p(-beta / kb);
    const double phi = forcing_at(forcing, k);
    if (phi > 0.0) log_s = logaddexp(log_s, std::log(2.0 * phi / (kb * alpha)) - log_p);
    const double d = log_s == kNegInf ? 0.0 : std::exp(log_p + log_s);
    require_finite(d, "solution", k);
    sol.d[static_cast<std::size_t>(k)] = d;
  }
  return sol;
}

void attach_tail_fit(RecurrenceSolution& solution, Family family, const ModelParams& params) {
  solution.fitted_exponent.reset();
  solution.fitted_ratio.reset();
  try {
    if (family == Family::Classical) {
      const auto lo = static_cast<std::int64_t>(10 + std::ceil(3.0 * params.zeta()));
      const std::int64_t hi = std::min(lo + 30, solution.k_max);
      solution.fitted_ratio = stats::fit_geometric_ratio(solution.d, lo, hi).ratio;
    } else if (family != Family::PureCopy) {
      const std::int64_t hi = std::min<std::int64_t>(1000, solution.k_max);
      const std::int64_t lo = std::min<std::int64_t>(100, hi / 10);
      solution.fitted_exponent = stats::fit_power_tail(solution.d, lo, hi).exponent;
    }
  } catch (const stats::InsufficientDataError&) {
  }
}

double tail_ratio(const RecurrenceSolution& solution, std::int64_t k, std::int64_t factor) {
  if (k < 0 || factor * k > solution.k_max || solution.at(k) == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return solution.at(factor * k) / solution.at(k);
}

double TailDescriptor::limiting_ratio() const {
  switch (kind) {
    case Kind::PowerLaw: return std::pow(2.0, -value);
    case Kind::Geometric: return value;
    case Kind::Degenerate: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

TailDescriptor predicted_exponent(Family family, const ModelParams& params) {
  using Kind = TailDescriptor::Kind;
  const double alpha = params.alpha();
  switch (family) {
    case Family::PureBa: return {Kind::PowerLaw, 3.0};
    case Family::Mixed:
      if (!(alpha > 0.0)) throw std::invalid_argument("mixed family needs alpha > 0");
      return {Kind::PowerLaw,
              1.0 + 2.0 * (1.0 + (1.0 - alpha) * params.zeta() / (alpha * params.mu()))};
    case Family::Classical: return {Kind::Geometric, params.zeta() / (1.0 + params.zeta())};
    case Family::HardCopy:
      if (!(alpha > 0.0)) throw std::invalid_argument("hard-copy family needs alpha > 0");
      return {Kind::PowerLaw, 1.0 / alpha};
    case Family::PureCopy: return {Kind::Degenerate, 0.0};
  }
  throw std::invalid_argument("unknown family");
}

std::vector<SandwichRow> comparing_sandwich(const RecurrenceSolution& lower,
                                            const RecurrenceSolution& upper,
                                            const Sequence& empirical, double slack) {
  const std::int64_t n = std::min({lower.k_max + 1, upper.k_max + 1,
                                   static_cast<std::int64_t>(empirical.size())});
  std::vector<SandwichRow> rows;
  rows.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  for (std::int64_t k = 0; k < n; ++k) {
    SandwichRow row;
    row.k = k;
    row.lower = lower.at(k);
    row.upper = upper.at(k);
    row.empirical = empirical[static_cast<std::size_t>(k)];
    row.lower_ok = row.lower - slack <= row.empirical;
    row.upper_ok = row.empirical <= row.upper + slack;
    rows.push_back(row);
  }
  return rows;
}

double sandwich_slack(double m, std::int64_t steps) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  return m * std::pow(static_cast<double>(steps), -0.2);
}

}  // namespace mixgraph::recurrence
