#include "mixgraph/recurrence/spec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mixgraph::recurrence {

namespace {

void require_k_max(std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
}

double lgamma_int(std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::PureBa: return "pure-ba";
    case Family::Mixed: return "mixed";
    case Family::Classical: return "classical";
    case Family::HardCopy: return "hard-copy";
    case Family::PureCopy: return "pure-copy";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::PureBa, Family::Mixed, Family::Classical, Family::HardCopy,
                   Family::PureCopy}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown recurrence family '" + std::string(name) + "'");
}

Family family_for(ModelKind model, const ModelParams& params) {
  switch (model) {
    case ModelKind::Ba: return Family::PureBa;
    case ModelKind::Classical: return Family::Classical;
    case ModelKind::Mixed:
      if (params.alpha() == 1.0) return Family::PureBa;
      if (params.alpha() == 0.0) return Family::Classical;
      return Family::Mixed;
    case ModelKind::HardCopy:
      if (params.alpha() == 1.0) return Family::PureCopy;
      if (params.alpha() == 0.0) return Family::Classical;
      return Family::HardCopy;
  }
  throw std::invalid_argument("unknown model kind");
}

RecurrenceSpec make_spec(Family family, const ModelParams& params, Sequence forcing,
                         std::int64_t k_max) {
  require_k_max(k_max);
  const auto n = static_cast<std::size_t>(k_max) + 1;
  RecurrenceSpec spec{family, params, Sequence(n, 0.0), Sequence(n, 0.0), std::move(forcing), false};
  spec.forcing.resize(n, 0.0);
  for (double v : spec.forcing) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("forcing must be finite and nonnegative");
  }

  const double alpha = params.alpha();
  const double mu = params.mu();
  const double zeta = params.zeta();
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(i);
    double a = 0.0;
    double b = 0.0;
    switch (family) {
      case Family::PureBa:
        a = (k - 1.0) / 2.0;
        b = k / 2.0;
        break;
      case Family::Mixed: {
        if (!(alpha > 0.0 && alpha < 1.0)) {
          throw std::invalid_argument("mixed family needs 0 < alpha < 1");
        }
        const double slope = alpha * mu / (2.0 * params.xi());
        a = slope * (k - 1.0) + (1.0 - alpha) * zeta;
        b = slope * k + (1.0 - alpha) * zeta;
        break;
      }
      case Family::Classical:
        a = b = zeta;
        break;
      case Family::HardCopy:
        a = b = alpha * (k - 1.0) + (1.0 - alpha) * mu;
        break;
      case Family::PureCopy:
        a = b = k - 1.0;
        break;
    }
    spec.gain[i] = i == 0 ? 0.0 : a;
    spec.loss[i] = b;
  }
  spec.extension = family == Family::Mixed && mu != zeta;
  return spec;
}

Sequence forcing_lower_psi(double rho, std::int64_t k_max) {
  require_k_max(k_max);
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("rho must lie in (0, 1], got " + std::to_string(rho));
  }
  Sequence psi(static_cast<std::size_t>(k_max) + 1, 0.0);
  psi[0] = rho;
  return psi;
}

double default_rho(Family family, const ModelParams& params) {
  switch (family) {
    case Family::PureBa: return std::exp(-params.mu()) / 2.0;
    case Family::Mixed:
    case Family::Classical: return (1.0 - params.alpha()) * std::exp(-params.zeta());
    case Family::HardCopy: return (1.0 - params.alpha()) * std::exp(-params.mu());
    case Family::PureCopy: break;
  }
  throw std::invalid_argument("pure copying never creates isolated vertices; no positive rho exists");
}

Sequence poisson_pmf(double rate, std::int64_t k_max) {
  require_k_max(k_max);
  if (!(rate > 0.0)) throw std::invalid_argument("Poisson rate must be positive");
  Sequence p(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    p[static_cast<std::size_t>(k)] =
        std::exp(static_cast<double>(k) * std::log(rate) - rate - lgamma_int(k));
  }
  return p;
}

Sequence forcing_upper_phi(Family family, const ModelParams& params, std::int64_t k_max, double c0) {
  require_k_max(k_max);
  if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be positive");
  const auto n = static_cast<std::size_t>(k_max) + 1;
  const double mu_or_one = std::max(params.mu(), 1.0);

  auto power_tail = [&](std::int64_t order) {
    Sequence phi(n, 0.0);
    phi[0] = std::exp(-params.mu());
    const double log_c = static_cast<double>(order) * std::log(mu_or_one) + lgamma_int(order);
    for (std::size_t k = 1; k < n; ++k) {
      phi[k] = std::exp(log_c - static_cast<double>(order) * std::log(static_cast<double>(k)));
    }
    return phi;
  };

  switch (family) {
    case Family::PureBa: return power_tail(4);
    case Family::Mixed: {
      if (params.alpha() == 0.0) {
        throw std::invalid_argument("n(alpha) is undefined at alpha = 0; use the classical forcing");
      }
      return power_tail(3 + static_cast<std::int64_t>(std::floor(2.0 / params.alpha())));
    }
    case Family::Classical: {
      Sequence phi = poisson_pmf(params.zeta(), k_max);
      for (std::size_t k = 1; k < n; ++k) phi[k] *= c0;
      return phi;
    }
    case Family::HardCopy: {
      Sequence phi = poisson_pmf(params.mu(), k_max);
      for (std::size_t k = 0; k < n; ++k) phi[k] *= (1.0 - params.alpha()) * (k == 0 ? 1.0 : c0);
      return phi;
    }
    case Family::PureCopy: return Sequence(n, 0.0);
  }
  throw std::invalid_argument("unknown family");
}

Sequence forcing_plugin(const std::map<std::int64_t, double>& increment_freq, std::int64_t k_max) {
  require_k_max(k_max);
  if (increment_freq.empty()) throw std::invalid_argument("plug-in forcing needs increment frequencies");
  Sequence phi(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (const auto& [k, f] : increment_freq) {
    if (k < 0 || !(f >= 0.0)) throw std::invalid_argument("invalid increment frequency");
    if (k <= k_max) phi[static_cast<std::size_t>(k)] = f;
  }
  return phi;
}

}  // namespace mixgraph::recurrence
