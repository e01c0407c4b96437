// Both backends against exact enumeration of the first five steps.
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "doctest.h"
#include "mixgraph/process/process.hpp"
#include "mixgraph/vertex/vertex_sim.hpp"
#include "oracle_values.hpp"

using namespace mixgraph;

namespace {

constexpr int kSmallT = 5;
constexpr int kRuns = 20000;
constexpr double kZ = 5.0;

using Runner = std::function<TrajectorySummary(std::uint64_t)>;

void check_against_oracle(const Runner& run, const std::array<double, 6>& mean,
                          const std::array<double, 6>& var, double edge_mean, double edge_var) {
  std::array<double, 6> sum{};
  double edges = 0.0;
  for (int r = 0; r < kRuns; ++r) {
    const auto s = run(derive_seed(99, static_cast<std::uint64_t>(r)));
    for (const auto& [k, c] : s.final_counts) {
      REQUIRE(k <= kSmallT);
      sum[static_cast<std::size_t>(k)] += static_cast<double>(c);
    }
    edges += static_cast<double>(s.final_edge_count);
  }
  for (std::size_t k = 0; k < mean.size(); ++k) {
    const double se = std::sqrt(var[k] / kRuns);
    INFO("k = " << k);
    if (se == 0.0) {
      CHECK(sum[k] / kRuns == doctest::Approx(mean[k]));
    } else {
      CHECK(std::abs(sum[k] / kRuns - mean[k]) <= kZ * se);
    }
  }
  if (edge_var == 0.0) {
    CHECK(edges / kRuns == doctest::Approx(edge_mean));
  } else {
    CHECK(std::abs(edges / kRuns - edge_mean) <= kZ * std::sqrt(edge_var / kRuns));
  }
}

ObservationPlan quiet_plan() { return ObservationPlan{}; }

Runner histogram(ModelParams p, ModelKind m) {
  return [=](std::uint64_t seed) { return process::run_process(p, m, kSmallT, seed, quiet_plan()); };
}

Runner vertex_runner(ModelParams p, ModelKind m, vertex::BernoulliSampler s) {
  return [=](std::uint64_t seed) {
    return vertex::run_vertex_process(p, m, kSmallT, seed, quiet_plan(), s);
  };
}

}  // namespace

TEST_CASE("histogram backend reproduces exact small-t means") {
  using namespace oracle;
  check_against_oracle(histogram(ModelParams::ba(1.0), ModelKind::Ba), kBaMu1MeanCounts,
                       kBaMu1VarCounts, kBaMu1MeanEdges, kBaMu1VarEdges);
  check_against_oracle(histogram(ModelParams::classical(1.0), ModelKind::Classical),
                       kClassicalZeta1MeanCounts, kClassicalZeta1VarCounts,
                       kClassicalZeta1MeanEdges, kClassicalZeta1VarEdges);
  check_against_oracle(histogram(ModelParams::mixed(0.5, 1.0, 1.0), ModelKind::Mixed),
                       kMixedHalfMeanCounts, kMixedHalfVarCounts, kMixedHalfMeanEdges,
                       kMixedHalfVarEdges);
}

TEST_CASE("vertex backend reproduces exact small-t means with both samplers") {
  using namespace oracle;
  for (auto s : {vertex::BernoulliSampler::Literal, vertex::BernoulliSampler::Thinned}) {
    check_against_oracle(vertex_runner(ModelParams::ba(1.0), ModelKind::Ba, s), kBaMu1MeanCounts,
                         kBaMu1VarCounts, kBaMu1MeanEdges, kBaMu1VarEdges);
    check_against_oracle(vertex_runner(ModelParams::classical(1.0), ModelKind::Classical, s),
                         kClassicalZeta1MeanCounts, kClassicalZeta1VarCounts,
                         kClassicalZeta1MeanEdges, kClassicalZeta1VarEdges);
    check_against_oracle(vertex_runner(ModelParams::mixed(0.5, 1.0, 1.0), ModelKind::Mixed, s),
                         kMixedHalfMeanCounts, kMixedHalfVarCounts, kMixedHalfMeanEdges,
                         kMixedHalfVarEdges);
    check_against_oracle(vertex_runner(ModelParams::hard_copy(0.5, 1.0), ModelKind::HardCopy, s),
                         kHardCopyHalfMeanCounts, kHardCopyHalfVarCounts,
                         kHardCopyHalfMeanEdges, kHardCopyHalfVarEdges);
    check_against_oracle(vertex_runner(ModelParams::hard_copy(1.0, 1.0), ModelKind::HardCopy, s),
                         kPureCopyMeanCounts, kPureCopyVarCounts, kPureCopyMeanEdges,
                         kPureCopyVarEdges);
  }
}

TEST_CASE("histogram state keeps its invariants over a long run") {
  Rng rng(17);
  for (auto model : {ModelKind::Ba, ModelKind::Classical, ModelKind::Mixed}) {
    const auto params = ModelParams::mixed(model == ModelKind::Ba ? 1.0 : model == ModelKind::Classical ? 0.0 : 0.5,
                                           1.5, 1.5);
    auto state = process::init_state();
    for (int i = 0; i < 2000; ++i) {
      const auto before_edges = state.edge_count;
      const auto out = process::step(state, model, params, rng);
      std::int64_t selected = 0;
      for (const auto& [k, n] : out.per_class_selections) selected += n;
      REQUIRE(selected == out.a);
      REQUIRE(state.edge_count == before_edges + out.a);
    }
    CHECK_NOTHROW(process::validate(state));
    CHECK(state.t == 2001);
  }
}

TEST_CASE("first BA step selects each endpoint with probability one half") {
  const auto params = ModelParams::ba(1.0);
  Rng rng(23);
  int counts[3] = {};
  for (int i = 0; i < 40000; ++i) {
    auto state = process::init_state();
    const auto out = process::step_ba(state, params, rng);
    REQUIRE(out.a <= 2);
    ++counts[out.a];
  }
  CHECK(std::abs(counts[0] - 10000) < 5 * std::sqrt(40000 * 0.25 * 0.75));
  CHECK(std::abs(counts[1] - 20000) < 5 * std::sqrt(40000 * 0.5 * 0.5));
}

TEST_CASE("validate rejects a corrupt histogram") {
  auto state = process::init_state();
  state.edge_count = 3;
  CHECK_THROWS_AS(process::validate(state), process::CorruptStateError);
  state = process::init_state();
  state.counts[1] = 3;
  CHECK_THROWS_AS(process::validate(state), process::CorruptStateError);
}

TEST_CASE("hardcopy is rejected by the histogram backend") {
  CHECK_THROWS(process::run_process(ModelParams::hard_copy(0.5, 1.0), ModelKind::HardCopy, 10, 1,
                                    ObservationPlan{}));
}

TEST_CASE("run_process records checkpoints and the increment window") {
  const auto plan = ObservationPlan::defaults(1600);
  const auto s = process::run_process(ModelParams::ba(1.0), ModelKind::Ba, 1600, 3, plan);
  REQUIRE(s.checkpoints.size() == 5);
  CHECK(s.checkpoints.back().t == 1600);
  CHECK(s.checkpoints.back().edge_count == s.final_edge_count);
  CHECK(s.checkpoints.back().isolated == s.isolated());
  std::int64_t total = 0;
  for (const auto& [k, c] : s.increment_counts) total += c;
  CHECK(total == 800);
  CHECK_THROWS(process::run_process(ModelParams::ba(1.0), ModelKind::Ba, 10, 3,
                                    ObservationPlan{{11}, 0, 0, false, false}));
}

TEST_CASE("same seed gives the same trajectory") {
  const auto plan = ObservationPlan::defaults(5000);
  const auto a = process::run_process(ModelParams::ba(1.0), ModelKind::Ba, 5000, 8, plan);
  const auto b = process::run_process(ModelParams::ba(1.0), ModelKind::Ba, 5000, 8, plan);
  CHECK(a.final_counts == b.final_counts);
  CHECK(a.increment_counts == b.increment_counts);
  const auto c = vertex::run_vertex_process(ModelParams::ba(1.0), ModelKind::Ba, 5000, 8, plan);
  const auto d = vertex::run_vertex_process(ModelParams::ba(1.0), ModelKind::Ba, 5000, 8, plan);
  CHECK(c.final_counts == d.final_counts);
}
