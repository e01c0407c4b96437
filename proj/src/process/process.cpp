#include "mixgraph/process/process.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mixgraph::process {

namespace {

// Draws Binomial(D_k, prob(k)) for every class of the snapshot, then moves the
// selected vertices up one class and inserts the new vertex.
template <class ProbFn>
StepOutcome class_binomial_step(DegreeHistogram& state, ProbFn prob, Rng& rng,
                                AttachmentManner manner) {
  StepOutcome out;
  out.manner = manner;

  std::int64_t vertices = 0;
  std::int64_t degree_sum = 0;
  for (const auto& [k, n] : state.counts) {
    vertices += n;
    degree_sum += k * n;
    const std::int64_t selected = rng.binomial(n, prob(k));
    if (selected > 0) {
      out.per_class_selections.emplace_back(k, selected);
      out.a += selected;
    }
  }
  if (vertices != state.vertex_count() || degree_sum != 2 * state.edge_count) {
    throw CorruptStateError("state at t=" + std::to_string(state.t) +
                            " violates the vertex-count or handshake identity");
  }

  // Descending order: class k+1 has already released its own selections.
  for (auto it = out.per_class_selections.rbegin(); it != out.per_class_selections.rend(); ++it) {
    const auto [k, selected] = *it;
    auto from = state.counts.find(k);
    from->second -= selected;
    state.counts[k + 1] += selected;
    if (from->second == 0) state.counts.erase(from);
  }
  state.counts[out.a] += 1;

  state.edge_count += out.a;
  state.last_increment = out.a;
  state.t += 1;
  state.max_degree = state.counts.rbegin()->first;
  return out;
}

StepOutcome preferential(DegreeHistogram& state, double mu, Rng& rng) {
  const double scale = mu / (2.0 * static_cast<double>(state.edge_count));
  return class_binomial_step(
      state, [scale](std::int64_t k) { return std::min(scale * static_cast<double>(k), 1.0); },
      rng, AttachmentManner::Preferential);
}

StepOutcome classical(DegreeHistogram& state, double rate, Rng& rng) {
  const double p = std::min(rate / static_cast<double>(state.t + 1), 1.0);
  return class_binomial_step(
      state, [p](std::int64_t) { return p; }, rng, AttachmentManner::Classical);
}

void check_edges(const DegreeHistogram& state) {
  if (state.edge_count < 1) {
    throw CorruptStateError("edge count must be positive for the preferential rule");
  }
}

}  // namespace

StepOutcome step_ba(DegreeHistogram& state, const ModelParams& params, Rng& rng) {
  check_edges(state);
  return preferential(state, params.mu(), rng);
}

StepOutcome step_classical(DegreeHistogram& state, const ModelParams& params, Rng& rng) {
  return classical(state, params.zeta(), rng);
}

StepOutcome step_mixed(DegreeHistogram& state, const ModelParams& params, Rng& rng) {
  if (rng.uniform() < params.alpha()) {
    check_edges(state);
    return preferential(state, params.mu(), rng);
  }
  return classical(state, params.zeta(), rng);
}

StepOutcome step(DegreeHistogram& state, ModelKind model, const ModelParams& params, Rng& rng) {
  switch (model) {
    case ModelKind::Ba: return step_ba(state, params, rng);
    case ModelKind::Classical: return step_classical(state, params, rng);
    case ModelKind::Mixed: return step_mixed(state, params, rng);
    case ModelKind::HardCopy: break;
  }
  throw std::invalid_argument("hardcopy requires the vertex backend");
}

TrajectorySummary run_process(const ModelParams& params, ModelKind model, std::int64_t steps,
                              std::uint64_t seed, const ObservationPlan& plan) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (model == ModelKind::HardCopy) throw std::invalid_argument("hardcopy requires the vertex backend");

  std::vector<std::int64_t> checkpoints = plan.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  for (std::int64_t c : checkpoints) {
    if (c < 1 || c > steps) {
      throw std::invalid_argument("checkpoint " + std::to_string(c) + " outside [1, " +
                                  std::to_string(steps) + "]");
    }
  }

  Rng rng(seed);
  DegreeHistogram state = init_state();
  TrajectorySummary summary;
  summary.steps = steps;
  summary.seed = seed;

  auto next_checkpoint = checkpoints.begin();
  auto record = [&] {
    while (next_checkpoint != checkpoints.end() && *next_checkpoint == state.t) {
      summary.checkpoints.push_back({state.t, state.edge_count, state.max_degree, state.count(0)});
      ++next_checkpoint;
    }
  };

  record();
  while (state.t < steps) {
    const std::int64_t t = state.t;
    const StepOutcome out = step(state, model, params, rng);
    if (t >= plan.window_begin && t < plan.window_end) {
      summary.increment_counts[out.a] += 1;
      if (plan.keep_increment_sequence) summary.increments.push_back(out.a);
    }
    record();
  }

  summary.final_counts = state.counts;
  summary.final_edge_count = state.edge_count;
  summary.final_max_degree = state.max_degree;
  return summary;
}

}  // namespace mixgraph::process
