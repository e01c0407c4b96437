// process.hpp: histogram-level simulation of the classical, BA and mixed processes.
//
// Every rule gives all vertices of the same degree the same inclusion
// probability, and inclusions are independent, so the number of selected
// degree-k vertices is exactly Binomial(D_k, p_k). A step therefore costs
// one draw per occupied degree class instead of one per vertex.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mixgraph/core/params.hpp"
#include "mixgraph/core/rng.hpp"
#include "mixgraph/core/trajectory.hpp"
#include "mixgraph/process/degree_histogram.hpp"

namespace mixgraph::process {

enum class AttachmentManner { Preferential, Classical };

struct StepOutcome {
  std::int64_t a = 0;  // degree of the new vertex
  // (k, number of degree-k vertices that gained an edge), ascending k, nonzero only.
  std::vector<std::pair<std::int64_t, std::int64_t>> per_class_selections;
  AttachmentManner manner = AttachmentManner::Preferential;
};

// All step functions advance `state` from t to t+1 in place. Probabilities
// come from the pre-step snapshot; selections are applied after every class
// has been drawn.

// p_k = min(mu * k / (2 e_t), 1).
StepOutcome step_ba(DegreeHistogram& state, const ModelParams& params, Rng& rng);

// p = min(zeta / (t + 1), 1) for each of the t + 1 existing vertices.
StepOutcome step_classical(DegreeHistogram& state, const ModelParams& params, Rng& rng);

// Preferential with probability alpha, classical otherwise.
StepOutcome step_mixed(DegreeHistogram& state, const ModelParams& params, Rng& rng);

// Dispatch on model kind. HardCopy needs neighbour identities and is rejected.
StepOutcome step(DegreeHistogram& state, ModelKind model, const ModelParams& params, Rng& rng);

TrajectorySummary run_process(const ModelParams& params, ModelKind model, std::int64_t steps,
                              std::uint64_t seed, const ObservationPlan& plan);

}  // namespace mixgraph::process
