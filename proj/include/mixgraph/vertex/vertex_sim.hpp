// vertex_sim.hpp: per-vertex reference simulator, hard copying, component and cohort statistics.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mixgraph/core/params.hpp"
#include "mixgraph/core/rng.hpp"
#include "mixgraph/core/trajectory.hpp"
#include "mixgraph/vertex/vertex_graph.hpp"

namespace mixgraph::vertex {

// How the independent per-vertex Bernoulli trials are realised.
//   Literal: one uniform per existing vertex.
//   Thinned: geometric skips at the largest inclusion probability, each
//            candidate accepted with p_i / p_max. Same law, O(t * p_max) work.
enum class BernoulliSampler { Literal, Thinned };

// One classical/BA/mixed step; returns the degree of the new vertex.
std::int64_t step_vertex(VertexGraph& graph, const ModelParams& params, ModelKind model, Rng& rng,
                         BernoulliSampler sampler = BernoulliSampler::Thinned);

// One hard-copy step: with probability alpha the new vertex takes the neighbour
// set of a uniformly chosen existing vertex (never an edge to that vertex
// itself); otherwise classical attachment at rate mu. Requires adjacency.
std::int64_t step_hardcopy(VertexGraph& graph, const ModelParams& params, Rng& rng,
                           BernoulliSampler sampler = BernoulliSampler::Thinned);

// |largest component| / (t + 1).
double giant_fraction(const VertexGraph& graph);

std::map<std::int64_t, std::int64_t> degree_counts(const VertexGraph& graph);

struct CohortReport {
  std::int64_t t = 0;
  double nu = 0.0;
  // passes[s - 1] for birth times s = 1..t.
  std::vector<bool> passes;
  std::int64_t failed = 0;
  std::uint32_t max_degree = 0;
  double max_degree_bound = 0.0;
  bool max_degree_ok = true;
};

// d_{x_s}(t) <= (t/s)^{1/(2-nu)} (log t)^3 for every s >= 1, and the
// maximum-degree variant Delta_t <= t^{1/(2-nu)} (log t)^3. Requires t >= 3.
CohortReport cohort_degree_bound_check(const VertexGraph& graph, double nu);

// Whether neighbour lists are needed for this model.
bool needs_adjacency(ModelKind model);

// Expected peak bytes of one vertex-backend replica.
std::uint64_t projected_vertex_bytes(ModelKind model, const ModelParams& params, std::int64_t steps,
                                     bool track_adjacency);

TrajectorySummary run_vertex_process(const ModelParams& params, ModelKind model, std::int64_t steps,
                                     std::uint64_t seed, const ObservationPlan& plan,
                                     BernoulliSampler sampler = BernoulliSampler::Thinned);

}  // namespace mixgraph::vertex
