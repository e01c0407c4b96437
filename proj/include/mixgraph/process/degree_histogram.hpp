// degree_histogram.hpp: degree-class state of a growing graph.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace mixgraph::process {

// Thrown when a state violates the vertex-count or handshake identities.
class CorruptStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// counts[k] = number of vertices of degree k after step t. Empty classes are
// never stored; iteration is in ascending degree.
struct DegreeHistogram {
  std::int64_t t = 1;
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t edge_count = 1;
  std::int64_t last_increment = 0;
  std::int64_t max_degree = 1;

  std::int64_t vertex_count() const { return t + 1; }
  std::int64_t count(std::int64_t k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
};

// G_1: two vertices joined by one edge.
DegreeHistogram init_state();

// Checks every stated invariant; throws CorruptStateError naming the first violation.
void validate(const DegreeHistogram& state);

}  // namespace mixgraph::process
