#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "mixgraph/core/params.hpp"
#include "mixgraph/core/rng.hpp"
#include "mixgraph/core/trajectory.hpp"

using namespace mixgraph;

TEST_CASE("params validate ranges and build the presets") {
  CHECK_THROWS_AS(ModelParams(1.5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(0.5, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ModelParams(0.5, 1.0, -1.0), std::invalid_argument);
  const auto ba = ModelParams::ba(1.0);
  CHECK(ba.alpha() == 1.0);
  CHECK(ba.zeta() == 1.0);
  const auto cl = ModelParams::classical(2.0);
  CHECK(cl.alpha() == 0.0);
  CHECK(cl.xi() == doctest::Approx(2.0));
  CHECK(ModelParams::mixed(0.5, 1.0, 3.0).xi() == doctest::Approx(2.0));
  CHECK(ModelParams::ba(2.5).outside_proved_regime());
  CHECK(parse_model_kind("hardcopy") == ModelKind::HardCopy);
  CHECK(to_string(ModelKind::Mixed) == "mixed");
  CHECK_THROWS(parse_model_kind("copy"));
}

TEST_CASE("rng is reproducible and seeds decorrelate") {
  Rng a(7);
  Rng b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(42, i));
  CHECK(seeds.size() == 1000);
  CHECK(derive_seed(42, 3) == derive_seed(42, 3));
  CHECK(derive_seed(42, 3) != derive_seed(43, 3));
}

TEST_CASE("below stays in range and is roughly uniform") {
  Rng rng(1);
  int counts[5] = {};
  for (int i = 0; i < 50000; ++i) {
    const auto v = rng.below(5);
    REQUIRE(v < 5);
    ++counts[v];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK_THROWS(rng.below(0));
}

TEST_CASE("binomial matches mean and variance on both code paths") {
  struct Case { std::int64_t n; double p; };
  for (Case c : {Case{10, 0.3}, Case{1000, 0.001}, Case{100000, 0.4}, Case{200, 0.9}}) {
    Rng rng(11);
    const int draws = 40000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < draws; ++i) {
      const auto x = static_cast<double>(rng.binomial(c.n, c.p));
      REQUIRE(x >= 0);
      REQUIRE(x <= c.n);
      sum += x;
      sq += x * x;
    }
    const double mean = sum / draws;
    const double var = sq / draws - mean * mean;
    const double true_var = c.n * c.p * (1 - c.p);
    CHECK(std::abs(mean - c.n * c.p) < 5.0 * std::sqrt(true_var / draws));
    CHECK(var == doctest::Approx(true_var).epsilon(0.05));
  }
  Rng rng(3);
  CHECK(rng.binomial(0, 0.5) == 0);
  CHECK(rng.binomial(10, 0.0) == 0);
  CHECK(rng.binomial(10, 1.5) == 10);
}

TEST_CASE("geometric skip has mean (1-p)/p") {
  Rng rng(5);
  const double p = 0.05;
  double sum = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) sum += static_cast<double>(rng.geometric_skip(p));
  const double mean = (1 - p) / p;
  const double sd = std::sqrt(1 - p) / p;
  CHECK(std::abs(sum / draws - mean) < 5 * sd / std::sqrt(draws));
  CHECK(rng.geometric_skip(1.0) == 0);
}

TEST_CASE("default observation plan") {
  const auto plan = ObservationPlan::defaults(160);
  CHECK(plan.checkpoints == std::vector<std::int64_t>{10, 20, 40, 80, 160});
  CHECK(plan.window_begin == 80);
  CHECK(plan.window_end == 160);
  CHECK(ObservationPlan::defaults(3).checkpoints == std::vector<std::int64_t>{1, 3});
}
