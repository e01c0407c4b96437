// analysis.hpp: recurrence predictions attached to a simulated ensemble.
#pragma once

#include <cstdint>
#include <map>

#include "mixgraph/core/params.hpp"
#include "mixgraph/harness/output.hpp"

namespace mixgraph::harness {

// Lower (default rho), upper and plug-in stationary solutions for a model.
// The plug-in solution needs increment frequencies and is skipped for hard
// copying, whose increments include copied degrees that the preset already
// accounts for. Pure copying has no stationary solution and yields an empty set.
SolutionSet standard_solutions(ModelKind model, const ModelParams& params,
                               const std::map<std::int64_t, double>* increment_freq,
                               std::int64_t k_max);

}  // namespace mixgraph::harness
