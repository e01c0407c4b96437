#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mixgraph/vertex/union_find.hpp"
#include "mixgraph/vertex/vertex_sim.hpp"

using namespace mixgraph;
using namespace mixgraph::vertex;

TEST_CASE("union-find tracks component sizes and the largest component") {
  UnionFind uf;
  for (int i = 0; i < 6; ++i) uf.add();
  CHECK(uf.components() == 6);
  uf.unite(0, 1);
  uf.unite(2, 3);
  uf.unite(1, 3);
  CHECK(uf.component_size(2) == 4);
  CHECK(uf.largest() == 4);
  CHECK(uf.components() == 3);
  CHECK(uf.find(0) == uf.find(3));
  CHECK(uf.find(4) != uf.find(5));
  uf.unite(0, 3);
  CHECK(uf.components() == 3);
}

TEST_CASE("BA giant component is exactly the non-isolated vertices") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = run_vertex_process(ModelParams::ba(1.0), ModelKind::Ba, 20000, seed,
                                      ObservationPlan::defaults(20000));
    REQUIRE(s.giant_fraction.has_value());
    CHECK(*s.giant_fraction == 1.0 - static_cast<double>(s.isolated()) / 20001.0);
  }
}

TEST_CASE("edge dump rebuilds a valid graph with the same degrees") {
  ObservationPlan plan = ObservationPlan::defaults(3000);
  plan.edge_dump = true;
  for (auto model : {ModelKind::Ba, ModelKind::HardCopy}) {
    const auto params = model == ModelKind::Ba ? ModelParams::ba(1.0) : ModelParams::hard_copy(0.4, 1.0);
    const auto s = run_vertex_process(params, model, 3000, 4, plan);
    CHECK(static_cast<std::int64_t>(s.edges.size()) == s.final_edge_count);
    const auto g = VertexGraph::from_edges(3000, s.edges, true);
    CHECK_NOTHROW(validate(g));
    CHECK(degree_counts(g) == s.final_counts);
  }
}

TEST_CASE("validate catches inconsistent graphs") {
  auto g = VertexGraph::initial(true);
  g.edge_count = 2;
  CHECK_THROWS_AS(validate(g), InvalidGraphError);
  const std::vector<Edge> bad{{0, 1}, {0, 5}};
  CHECK_THROWS(VertexGraph::from_edges(2, bad, true));
}

TEST_CASE("hard copy never links the new vertex to the copied vertex") {
  Rng rng(12);
  auto g = VertexGraph::initial(true);
  const auto params = ModelParams::hard_copy(1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    step_hardcopy(g, params, rng);
    const auto& nbrs = (*g.adjacency)[static_cast<std::size_t>(g.t)];
    // Pure copying starts from an edge, so every copied neighbour set is non-empty.
    CHECK(!nbrs.empty());
    for (auto w : nbrs) CHECK(w != g.t);
  }
  CHECK_NOTHROW(validate(g));
  CHECK(giant_fraction(g) == 1.0);
}

TEST_CASE("cohort bound check") {
  const auto s = run_vertex_process(ModelParams::ba(1.0), ModelKind::Ba, 10000, 6,
                                    ObservationPlan::defaults(10000));
  REQUIRE(s.cohort.has_value());
  CHECK(s.cohort->failed == 0);
  CHECK(s.cohort->max_degree_ok);
  CHECK(s.cohort->max_degree_bound ==
        doctest::Approx(std::pow(10000.0, 1.0 / 1.9) * std::pow(std::log(10000.0), 3)));
  CHECK_THROWS(cohort_degree_bound_check(VertexGraph::initial(false), 0.1));
}

TEST_CASE("memory projection grows with copying") {
  const auto ba = projected_vertex_bytes(ModelKind::Ba, ModelParams::ba(1.0), 100000, false);
  const auto copy = projected_vertex_bytes(ModelKind::HardCopy, ModelParams::hard_copy(1.0, 1.0), 10000, true);
  CHECK(ba < 10'000'000);
  CHECK(copy > 50'000'000);
}
