// trajectory.hpp: observation plan and per-replica summary shared by both backends.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace mixgraph {

// What a single run records besides its final degree histogram.
struct ObservationPlan {
  // Steps t at which e_t, the maximum degree and D_0(t) are sampled.
  std::vector<std::int64_t> checkpoints;
  // Increments a_t = e_{t+1} - e_t are tallied for window_begin <= t < window_end.
  std::int64_t window_begin = 0;
  std::int64_t window_end = 0;
  // Keep the raw a_t sequence over the window, not just its histogram.
  bool keep_increment_sequence = false;
  // Vertex backend only: keep the final edge list.
  bool edge_dump = false;

  // Geometric checkpoints {T/16, T/8, T/4, T/2, T} and the window [T/2, T).
  static ObservationPlan defaults(std::int64_t steps);
};

struct CheckpointRecord {
  std::int64_t t = 0;
  std::int64_t edge_count = 0;
  std::int64_t max_degree = 0;
  std::int64_t isolated = 0;  // D_0(t)
};

struct CohortSummary {
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  bool max_degree_ok = true;
  double max_degree_bound = 0.0;
};

struct TrajectorySummary {
  std::int64_t steps = 0;
  std::uint64_t seed = 0;
  std::map<std::int64_t, std::int64_t> final_counts;
  std::int64_t final_edge_count = 0;
  std::int64_t final_max_degree = 0;
  std::vector<CheckpointRecord> checkpoints;
  std::map<std::int64_t, std::int64_t> increment_counts;
  std::vector<std::int64_t> increments;

  // Filled by the vertex backend only.
  std::optional<double> giant_fraction;
  std::optional<CohortSummary> cohort;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::int64_t isolated() const {
    auto it = final_counts.find(0);
    return it == final_counts.end() ? 0 : it->second;
  }
};

}  // namespace mixgraph
