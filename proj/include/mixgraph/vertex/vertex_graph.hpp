// vertex_graph.hpp: per-vertex state of a growing graph.
//
// Vertex ids are birth indices: x_s has id s, so birth(s) == s.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixgraph/vertex/union_find.hpp"

namespace mixgraph::vertex {

class InvalidGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;
using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct VertexGraph {
  std::int64_t t = 1;
  std::vector<std::uint32_t> degree;
  std::optional<Adjacency> adjacency;
  UnionFind components;
  std::int64_t edge_count = 1;
  std::uint32_t max_degree = 1;

  // G_1, optionally with neighbour lists.
  static VertexGraph initial(bool track_adjacency);

  // Graph on vertices 0..t from an explicit simple edge list. Used to build
  // hand-made states for checks; validates simplicity.
  static VertexGraph from_edges(std::int64_t t, std::span<const Edge> edges, bool track_adjacency);

  std::int64_t vertex_count() const { return t + 1; }
  static std::int64_t birth(std::uint32_t v) { return v; }
  bool tracks_adjacency() const { return adjacency.has_value(); }
};

// Handshake, vertex count, component sizes and (with adjacency) simplicity.
void validate(const VertexGraph& graph);

// All edges as (u, v) with u < v, sorted. Requires adjacency.
std::vector<Edge> edge_list(const VertexGraph& graph);

}  // namespace mixgraph::vertex
