#include "mixgraph/harness/analysis.hpp"

#include "mixgraph/recurrence/spec.hpp"

namespace mixgraph::harness {

SolutionSet standard_solutions(ModelKind model, const ModelParams& params,
                               const std::map<std::int64_t, double>* increment_freq,
                               std::int64_t k_max) {
  using namespace recurrence;
  SolutionSet out;
  const Family family = family_for(model, params);
  if (family == Family::PureCopy) return out;
  auto solve = [&](Sequence forcing) {
    auto sol = solve_forward(make_spec(family, params, std::move(forcing), k_max));
    attach_tail_fit(sol, family, params);
    return sol;
  };
  out.lower = solve(forcing_lower_psi(default_rho(family, params), k_max));
  out.upper = solve(forcing_upper_phi(family, params, k_max));
  if (increment_freq != nullptr && !increment_freq->empty() && family != Family::HardCopy) {
    out.plugin = solve(forcing_plugin(*increment_freq, k_max));
  }
  return out;
}

}  // namespace mixgraph::harness
