#include "mixgraph/vertex/vertex_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mixgraph::vertex {

namespace {

constexpr std::int64_t kMaxSteps = std::numeric_limits<std::uint32_t>::max() - 2;

std::uint32_t add_vertex(VertexGraph& g) {
  const auto v = static_cast<std::uint32_t>(g.degree.size());
  g.degree.push_back(0);
  g.components.add();
  if (g.adjacency) g.adjacency->emplace_back();
  return v;
}

void connect(VertexGraph& g, std::uint32_t old_v, std::uint32_t new_v) {
  const std::uint32_t d_old = ++g.degree[old_v];
  const std::uint32_t d_new = ++g.degree[new_v];
  g.max_degree = std::max({g.max_degree, d_old, d_new});
  if (g.adjacency) {
    (*g.adjacency)[old_v].push_back(new_v);
    (*g.adjacency)[new_v].push_back(old_v);
  }
  g.components.unite(old_v, new_v);
}

// Independent Bernoulli(prob(i)) trials over the existing vertices 0..last,
// each success joining i to new_v. prob(i) <= p_max must hold.
template <class ProbFn>
std::int64_t sweep(VertexGraph& g, std::uint32_t new_v, std::int64_t last, double p_max,
                   ProbFn prob, Rng& rng, BernoulliSampler sampler) {
  std::int64_t added = 0;
  if (sampler == BernoulliSampler::Literal) {
    for (std::int64_t i = 0; i <= last; ++i) {
      const auto v = static_cast<std::uint32_t>(i);
      if (rng.uniform() < prob(v)) {
        connect(g, v, new_v);
        ++added;
      }
    }
    return added;
  }
  if (!(p_max > 0.0)) return 0;
  std::int64_t i = rng.geometric_skip(p_max);
  while (i <= last) {
    const auto v = static_cast<std::uint32_t>(i);
    const double p = prob(v);
    if (p >= p_max || rng.uniform() * p_max < p) {
      connect(g, v, new_v);
      ++added;
    }
    const std::int64_t skip = rng.geometric_skip(p_max);
    if (skip >= last - i) break;
    i += 1 + skip;
  }
  return added;
}

std::int64_t preferential_sweep(VertexGraph& g, std::uint32_t new_v, double mu, Rng& rng,
                                BernoulliSampler sampler) {
  const std::int64_t last = g.t;
  const double scale = mu / (2.0 * static_cast<double>(g.edge_count));
  const double p_max = std::min(scale * g.max_degree, 1.0);
  const auto& degree = g.degree;
  return sweep(
      g, new_v, last, p_max,
      [&degree, scale](std::uint32_t v) { return std::min(scale * degree[v], 1.0); }, rng,
      sampler);
}

std::int64_t classical_sweep(VertexGraph& g, std::uint32_t new_v, double rate, Rng& rng,
                             BernoulliSampler sampler) {
  const std::int64_t last = g.t;
  const double p = std::min(rate / static_cast<double>(g.t + 1), 1.0);
  return sweep(
      g, new_v, last, p, [p](std::uint32_t) { return p; }, rng, sampler);
}

void finish_step(VertexGraph& g, std::int64_t added) {
  g.edge_count += added;
  g.t += 1;
}

void check_growable(const VertexGraph& g) {
  if (g.t >= kMaxSteps) throw InvalidGraphError("vertex ids exhausted");
  if (static_cast<std::int64_t>(g.degree.size()) != g.vertex_count()) {
    throw InvalidGraphError("degree array does not hold t + 1 vertices");
  }
  if (g.edge_count < 0) throw InvalidGraphError("negative edge count");
}

}  // namespace

std::int64_t step_vertex(VertexGraph& graph, const ModelParams& params, ModelKind model, Rng& rng,
                         BernoulliSampler sampler) {
  check_growable(graph);
  bool preferential = false;
  switch (model) {
    case ModelKind::Ba: preferential = true; break;
    case ModelKind::Classical: preferential = false; break;
    case ModelKind::Mixed: preferential = rng.uniform() < params.alpha(); break;
    case ModelKind::HardCopy: return step_hardcopy(graph, params, rng, sampler);
  }
  if (preferential && graph.edge_count < 1) {
    throw InvalidGraphError("edge count must be positive for the preferential rule");
  }
  const std::uint32_t new_v = add_vertex(graph);
  const std::int64_t added = preferential
                                 ? preferential_sweep(graph, new_v, params.mu(), rng, sampler)
                                 : classical_sweep(graph, new_v, params.zeta(), rng, sampler);
  finish_step(graph, added);
  return added;
}

std::int64_t step_hardcopy(VertexGraph& graph, const ModelParams& params, Rng& rng,
                           BernoulliSampler sampler) {
  if (!graph.adjacency) throw InvalidGraphError("hard copying requires tracked adjacency");
  check_growable(graph);
  if (rng.uniform() < params.alpha()) {
    const auto source = static_cast<std::uint32_t>(rng.below(static_cast<std::uint64_t>(graph.t + 1)));
    const std::vector<std::uint32_t> neighbours = (*graph.adjacency)[source];
    const std::uint32_t new_v = add_vertex(graph);
    (*graph.adjacency)[new_v].reserve(neighbours.size());
    for (std::uint32_t w : neighbours) connect(graph, w, new_v);
    const auto added = static_cast<std::int64_t>(neighbours.size());
    finish_step(graph, added);
    return added;
  }
  const std::uint32_t new_v = add_vertex(graph);
  const std::int64_t added = classical_sweep(graph, new_v, params.mu(), rng, sampler);
  finish_step(graph, added);
  return added;
}

double giant_fraction(const VertexGraph& graph) {
  return static_cast<double>(graph.components.largest()) / static_cast<double>(graph.vertex_count());
}

std::map<std::int64_t, std::int64_t> degree_counts(const VertexGraph& graph) {
  std::map<std::int64_t, std::int64_t> counts;
  for (std::uint32_t d : graph.degree) counts[d] += 1;
  return counts;
}

CohortReport cohort_degree_bound_check(const VertexGraph& graph, double nu) {
  if (graph.t < 3) throw std::invalid_argument("cohort check needs t >= 3 so that log t > 1");
  CohortReport report;
  report.t = graph.t;
  report.nu = nu;
  const double t = static_cast<double>(graph.t);
  const double exponent = 1.0 / (2.0 - nu);
  const double log_cube = std::pow(std::log(t), 3.0);
  report.passes.reserve(static_cast<std::size_t>(graph.t));
  for (std::int64_t s = 1; s <= graph.t; ++s) {
    const double bound = std::pow(t / static_cast<double>(s), exponent) * log_cube;
    const bool ok = static_cast<double>(graph.degree[static_cast<std::size_t>(s)]) <= bound;
    report.passes.push_back(ok);
    if (!ok) ++report.failed;
  }
  report.max_degree = graph.max_degree;
  report.max_degree_bound = std::pow(t, exponent) * log_cube;
  report.max_degree_ok = static_cast<double>(graph.max_degree) <= report.max_degree_bound;
  return report;
}

bool needs_adjacency(ModelKind model) { return model == ModelKind::HardCopy; }

std::uint64_t projected_vertex_bytes(ModelKind model, const ModelParams& params, std::int64_t steps,
                                     bool track_adjacency) {
  double edges = 1.0;
  for (std::int64_t t = 1; t < steps; ++t) {
    const double cap = static_cast<double>(t + 1);
    switch (model) {
      case ModelKind::Ba: edges += params.mu(); break;
      case ModelKind::Classical: edges += std::min(params.zeta(), cap); break;
      case ModelKind::Mixed:
        edges += params.alpha() * params.mu() + (1.0 - params.alpha()) * std::min(params.zeta(), cap);
        break;
      case ModelKind::HardCopy:
        edges += params.alpha() * 2.0 * edges / cap + (1.0 - params.alpha()) * std::min(params.mu(), cap);
        break;
    }
  }
  const double vertices = static_cast<double>(steps + 1);
  double bytes = vertices * (sizeof(std::uint32_t) + 2 * sizeof(std::uint32_t));
  if (track_adjacency) {
    bytes += vertices * sizeof(std::vector<std::uint32_t>);
    // Two directed entries per edge, with vector growth slack.
    bytes += 2.0 * edges * sizeof(std::uint32_t) * 1.5;
  }
  return static_cast<std::uint64_t>(bytes);
}

TrajectorySummary run_vertex_process(const ModelParams& params, ModelKind model, std::int64_t steps,
                                     std::uint64_t seed, const ObservationPlan& plan,
                                     BernoulliSampler sampler) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (steps >= kMaxSteps) throw std::invalid_argument("steps exceed the vertex id range");

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
  VertexGraph graph = VertexGraph::initial(needs_adjacency(model) || plan.edge_dump);
  graph.degree.reserve(static_cast<std::size_t>(steps + 1));
  if (graph.adjacency) graph.adjacency->reserve(static_cast<std::size_t>(steps + 1));

  TrajectorySummary summary;
  summary.steps = steps;
  summary.seed = seed;

  auto next_checkpoint = checkpoints.begin();
  auto record = [&] {
    while (next_checkpoint != checkpoints.end() && *next_checkpoint == graph.t) {
      const auto isolated = std::count(graph.degree.begin(), graph.degree.end(), 0u);
      summary.checkpoints.push_back({graph.t, graph.edge_count, graph.max_degree, isolated});
      ++next_checkpoint;
    }
  };

  record();
  while (graph.t < steps) {
    const std::int64_t t = graph.t;
    const std::int64_t a = step_vertex(graph, params, model, rng, sampler);
    if (t >= plan.window_begin && t < plan.window_end) {
      summary.increment_counts[a] += 1;
      if (plan.keep_increment_sequence) summary.increments.push_back(a);
    }
    record();
  }

  summary.final_counts = degree_counts(graph);
  summary.final_edge_count = graph.edge_count;
  summary.final_max_degree = graph.max_degree;
  summary.giant_fraction = giant_fraction(graph);
  if (steps >= 3) {
    const CohortReport cohort = cohort_degree_bound_check(graph, params.nu());
    summary.cohort = CohortSummary{steps, cohort.failed, cohort.max_degree_ok, cohort.max_degree_bound};
  }
  if (plan.edge_dump) summary.edges = edge_list(graph);
  return summary;
}

}  // namespace mixgraph::vertex
