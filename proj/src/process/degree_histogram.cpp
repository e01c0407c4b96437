#include "mixgraph/process/degree_histogram.hpp"

#include <string>

namespace mixgraph::process {

DegreeHistogram init_state() {
  DegreeHistogram state;
  state.t = 1;
  state.counts = {{1, 2}};
  state.edge_count = 1;
  state.last_increment = 1;
  state.max_degree = 1;
  return state;
}

void validate(const DegreeHistogram& state) {
  if (state.t < 1) throw CorruptStateError("step index must be at least 1");
  std::int64_t vertices = 0;
  std::int64_t degree_sum = 0;
  for (const auto& [k, n] : state.counts) {
    if (k < 0) throw CorruptStateError("negative degree class " + std::to_string(k));
    if (n <= 0) throw CorruptStateError("empty or negative class stored at degree " + std::to_string(k));
    if (k > state.t) {
      throw CorruptStateError("degree " + std::to_string(k) + " exceeds step index " +
                              std::to_string(state.t));
    }
    vertices += n;
    degree_sum += k * n;
  }
  if (vertices != state.vertex_count()) {
    throw CorruptStateError("vertex count " + std::to_string(vertices) + " != t + 1 = " +
                            std::to_string(state.vertex_count()));
  }
  if (degree_sum != 2 * state.edge_count) {
    throw CorruptStateError("handshake identity violated: sum k D_k = " + std::to_string(degree_sum) +
                            ", 2e = " + std::to_string(2 * state.edge_count));
  }
  const std::int64_t top = state.counts.empty() ? 0 : state.counts.rbegin()->first;
  if (top != state.max_degree) {
    throw CorruptStateError("max_degree " + std::to_string(state.max_degree) +
                            " disagrees with largest occupied class " + std::to_string(top));
  }
}

}  // namespace mixgraph::process
