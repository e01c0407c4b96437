// spec.hpp: master-recurrence coefficients and forcing sequences for each model family.
#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "mixgraph/core/params.hpp"

namespace mixgraph::recurrence {

enum class Family { PureBa, Mixed, Classical, HardCopy, PureCopy };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

// Ba -> PureBa; Classical -> Classical; Mixed -> Mixed, or the pure family at
// alpha = 0 / 1; HardCopy -> HardCopy, or PureCopy at alpha = 1 and Classical at 0.
Family family_for(ModelKind model, const ModelParams& params);

// Dense sequence indexed by degree k = 0, 1, ...
using Sequence = std::vector<double>;

// Stationary balance d_k = A_k d_{k-1} - B_k d_k + phi_k, d_{-1} = 0.
struct RecurrenceSpec {
  Family family = Family::PureBa;
  ModelParams params = ModelParams::ba(1.0);
  Sequence gain;     // A_k
  Sequence loss;     // B_k
  Sequence forcing;  // phi_k
  // Set when the coefficients are the general-zeta mixed extension (mu != zeta),
  // which is derived here rather than taken from the published recurrences.
  bool extension = false;

  std::int64_t k_max() const { return static_cast<std::int64_t>(gain.size()) - 1; }
};

// Coefficient presets, k = 0..k_max. A_0 = 0 everywhere.
//   PureBa    A_k = (k-1)/2,                    B_k = k/2
//   Mixed     A_k = a(k-1) + (1-alpha) zeta,    B_k = a k + (1-alpha) zeta,  a = alpha mu / (2 xi)
//   Classical A_k = B_k = zeta
//   HardCopy  A_k = B_k = alpha(k-1) + (1-alpha) mu
//   PureCopy  A_k = B_k = k-1
// HardCopy and PureCopy fold the copied vertex into the loss term, so B_0 can
// be negative there; only 1 + B_k > 0 matters for a stationary solution.
// The forcing is padded with zeros or cut to k_max + 1 entries.
RecurrenceSpec make_spec(Family family, const ModelParams& params, Sequence forcing,
                         std::int64_t k_max);

// Lower forcing: psi_0 = rho, psi_k = 0 for k >= 1. rho must lie in (0, 1].
Sequence forcing_lower_psi(double rho, std::int64_t k_max);

// Default rho: e^-mu / 2 for PureBa; (1-alpha) e^-zeta for Mixed and Classical;
// (1-alpha) e^-mu for HardCopy. PureCopy has P(a_t = 0) = 0 and throws.
double default_rho(Family family, const ModelParams& params);

// Upper forcing.
//   PureBa    phi_0 = e^-mu,   phi_k = C k^-4,        C = (mu v 1)^4 4!
//   Mixed     phi_0 = e^-mu,   phi_k = C k^-n,        n = 3 + floor(2/alpha), C = (mu v 1)^n n!
//   Classical phi_0 = e^-zeta, phi_k = c0 Poisson_k(zeta)
//   HardCopy  phi_0 = (1-alpha) e^-mu, phi_k = (1-alpha) c0 Poisson_k(mu)
//   PureCopy  phi = 0
// Mixed with alpha = 0 has no such bound and throws; use Classical.
Sequence forcing_upper_phi(Family family, const ModelParams& params, std::int64_t k_max,
                           double c0 = 1.0);

Sequence poisson_pmf(double rate, std::int64_t k_max);

// Window-averaged increment frequencies used directly as the forcing.
Sequence forcing_plugin(const std::map<std::int64_t, double>& increment_freq, std::int64_t k_max);

}  // namespace mixgraph::recurrence
