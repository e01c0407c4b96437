#include "mixgraph/vertex/vertex_graph.hpp"

#include <algorithm>
#include <string>

namespace mixgraph::vertex {

VertexGraph VertexGraph::initial(bool track_adjacency) {
  const Edge first{0, 1};
  return from_edges(1, std::span<const Edge>(&first, 1), track_adjacency);
}

VertexGraph VertexGraph::from_edges(std::int64_t t, std::span<const Edge> edges,
                                    bool track_adjacency) {
  if (t < 1) throw InvalidGraphError("step index must be at least 1");
  const auto n = static_cast<std::uint32_t>(t + 1);
  VertexGraph g;
  g.t = t;
  g.degree.assign(n, 0);
  g.components = UnionFind(n);
  g.edge_count = 0;
  g.max_degree = 0;
  Adjacency adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidGraphError("edge endpoint outside 0..t");
    if (u == v) throw InvalidGraphError("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++g.degree[u];
    ++g.degree[v];
    g.components.unite(u, v);
    ++g.edge_count;
  }
  for (auto& list : adj) {
    auto sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidGraphError("multi-edge in edge list");
    }
  }
  for (std::uint32_t d : g.degree) g.max_degree = std::max(g.max_degree, d);
  if (track_adjacency) g.adjacency = std::move(adj);
  return g;
}

void validate(const VertexGraph& graph) {
  const auto n = static_cast<std::size_t>(graph.vertex_count());
  if (graph.t < 1) throw InvalidGraphError("step index must be at least 1");
  if (graph.degree.size() != n) throw InvalidGraphError("degree array does not hold t + 1 vertices");
  if (graph.components.size() != n) throw InvalidGraphError("union-find does not hold t + 1 vertices");
  std::int64_t degree_sum = 0;
  std::uint32_t top = 0;
  for (std::uint32_t d : graph.degree) {
    degree_sum += d;
    top = std::max(top, d);
  }
  if (degree_sum != 2 * graph.edge_count) throw InvalidGraphError("handshake identity violated");
  if (top != graph.max_degree) throw InvalidGraphError("max_degree is stale");
  std::int64_t in_components = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (graph.components.find(v) == v) in_components += graph.components.component_size(v);
  }
  if (in_components != graph.vertex_count()) {
    throw InvalidGraphError("component sizes do not sum to t + 1");
  }
  if (!graph.adjacency) return;
  const Adjacency& adj = *graph.adjacency;
  if (adj.size() != n) throw InvalidGraphError("adjacency does not hold t + 1 vertices");
  for (std::uint32_t v = 0; v < n; ++v) {
    if (adj[v].size() != graph.degree[v]) throw InvalidGraphError("adjacency/degree mismatch");
    auto sorted = adj[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidGraphError("multi-edge at vertex " + std::to_string(v));
    }
    if (std::binary_search(sorted.begin(), sorted.end(), v)) {
      throw InvalidGraphError("self-loop at vertex " + std::to_string(v));
    }
  }
}

std::vector<Edge> edge_list(const VertexGraph& graph) {
  if (!graph.adjacency) throw InvalidGraphError("edge list requires tracked adjacency");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(graph.edge_count));
  const Adjacency& adj = *graph.adjacency;
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    for (std::uint32_t v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace mixgraph::vertex
