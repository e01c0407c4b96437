#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "mixgraph/core/rng.hpp"
#include "mixgraph/stats/checks.hpp"
#include "mixgraph/stats/ensemble.hpp"
#include "mixgraph/stats/fit.hpp"
#include "mixgraph/stats/ks.hpp"
#include "oracle_values.hpp"

using namespace mixgraph;
using namespace mixgraph::stats;

TEST_CASE("power-tail fit recovers an exact power law") {
  std::map<std::int64_t, double> f;
  for (std::int64_t k = 1; k <= 200; ++k) f[k] = 3.0 * std::pow(static_cast<double>(k), -2.5);
  const auto fit = fit_power_tail(f, 5, 100);
  CHECK(fit.exponent == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(fit.points == 96);
  std::vector<double> seq(201);
  for (std::size_t k = 1; k < seq.size(); ++k) seq[k] = f[static_cast<std::int64_t>(k)];
  CHECK(fit_power_tail(seq, 5, 100).exponent == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("geometric fit recovers an exact ratio") {
  std::map<std::int64_t, double> f;
  for (std::int64_t k = 0; k <= 40; ++k) f[k] = 0.5 * std::pow(0.5, static_cast<double>(k));
  CHECK(fit_geometric_ratio(f, 4, 16).ratio == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fits refuse sparse windows") {
  std::map<std::int64_t, double> f{{1, 0.5}, {2, 0.25}, {3, 0.1}};
  CHECK_THROWS_AS(fit_power_tail(f, 1, 50), InsufficientDataError);
  CHECK_THROWS_AS(fit_geometric_ratio(f, 1, 50), InsufficientDataError);
  CHECK_THROWS_AS(fit_power_tail_mle({{1, 5}}, 10), InsufficientDataError);
}

TEST_CASE("discrete MLE is close on a sampled power law") {
  Rng rng(3);
  std::map<std::int64_t, std::int64_t> counts;
  // Continuous Pareto beta = 3 above 9.5, rounded to the nearest integer.
  for (int i = 0; i < 200000; ++i) {
    const double x = 9.5 * std::pow(1.0 - rng.uniform(), -1.0 / 2.0);
    counts[static_cast<std::int64_t>(std::floor(x + 0.5))] += 1;
  }
  const auto fit = fit_power_tail_mle(counts, 10);
  CHECK(std::abs(fit.exponent - 3.0) < 5 * fit.std_error + 0.02);
}

TEST_CASE("ks distance on integer distributions") {
  const std::map<std::int64_t, double> p{{0, 0.5}, {1, 0.5}};
  const std::map<std::int64_t, double> q{{1, 0.5}, {2, 0.5}};
  CHECK(ks_distance(p, q) == doctest::Approx(0.5));
  CHECK(ks_distance(p, p) == 0.0);
  CHECK_THROWS(ks_distance(p, {{0, 0.7}}));
}

TEST_CASE("kolmogorov tail matches reference values") {
  CHECK(kolmogorov_q(0.5) == doctest::Approx(oracle::kKolmogorovQ_0_5).epsilon(1e-10));
  CHECK(kolmogorov_q(1.0) == doctest::Approx(oracle::kKolmogorovQ_1_0).epsilon(1e-10));
  CHECK(kolmogorov_q(1.36) == doctest::Approx(oracle::kKolmogorovQ_1_36).epsilon(1e-10));
  CHECK(kolmogorov_q(2.0) == doctest::Approx(oracle::kKolmogorovQ_2_0).epsilon(1e-10));
  CHECK(kolmogorov_q(0.0) == 1.0);
}

TEST_CASE("two-sample ks separates shifted samples and accepts equal laws") {
  Rng rng(9);
  std::vector<double> a(500);
  std::vector<double> b(500);
  std::vector<double> c(500);
  for (auto& v : a) v = rng.uniform();
  for (auto& v : b) v = rng.uniform();
  for (auto& v : c) v = rng.uniform() + 0.2;
  CHECK(ks_two_sample(a, b).p_value > 0.01);
  CHECK(ks_two_sample(a, c).p_value < 1e-6);
  CHECK_THROWS(ks_two_sample(a, {}));
}

TEST_CASE("increment limits and moment checks") {
  const auto params = ModelParams::ba(1.0);
  const std::map<std::int64_t, double> freq{{0, std::exp(-1.0)}, {1, std::exp(-1.0)}, {2, 0.2}};
  const auto r = increment_limits_check(freq, 10000, params);
  CHECK(r.dev0 == doctest::Approx(0.0));
  CHECK(r.upper_ok);
  CHECK_FALSE(increment_limits_check({{0, 0.5}}, 100000, params).upper_ok);

  // Poisson(1) samples satisfy the factorial moment bounds.
  Rng rng(4);
  std::vector<std::int64_t> samples(20000);
  for (auto& s : samples) s = rng.binomial(1000, 0.001);
  const std::vector<int> orders{2, 3, 4};
  const auto m = moment_bound_check(samples, params, orders);
  CHECK(m.pass);
  CHECK(m.moments.size() == 3);
  CHECK(m.moments[2].bound == doctest::Approx(24.0));
  CHECK_THROWS(moment_bound_check(std::vector<std::int64_t>(10, 1), params, orders));
  std::map<std::int64_t, std::int64_t> heavy{{0, 900}, {10, 100}};
  CHECK_FALSE(moment_bound_check(heavy, params, orders).pass);
}

TEST_CASE("concentration check counts violations") {
  const auto params = ModelParams::ba(1.0);
  std::map<std::int64_t, std::vector<std::int64_t>> trace{{1000, {1000, 1001, 999}},
                                                          {2000, {2000, 2300, 1990}}};
  const auto rep = concentration_check(trace, params);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].moderate_violations == 0);
  // 2000^{4/5} ~ 437 > 300 >= 0.1 * 2000.
  CHECK(rep.rows[1].moderate_violations == 0);
  CHECK(rep.rows[1].large_violations == 1);
  CHECK_THROWS(concentration_check({{10, {10}}}, params));
}

TEST_CASE("summarize aggregates replicas in order") {
  TrajectorySummary a;
  a.steps = 3;
  a.final_counts = {{1, 2}, {2, 1}, {3, 1}};
  a.final_edge_count = 3;
  a.checkpoints = {{3, 3, 3, 0}};
  a.increment_counts = {{1, 1}};
  TrajectorySummary b = a;
  b.final_counts = {{0, 1}, {1, 2}, {3, 1}};
  b.final_edge_count = 2;
  b.checkpoints = {{3, 2, 3, 1}};
  b.increment_counts = {{0, 1}};
  const std::vector<TrajectorySummary> runs{a, b};
  const auto s = summarize(runs);
  CHECK(s.replicas == 2);
  CHECK(s.mean_count.at(0) == 0.5);
  CHECK(s.mean_fraction.at(1) == doctest::Approx(2.0 / 3.0));
  CHECK(s.increment_freq.at(0) == 0.5);
  CHECK(s.e_by_checkpoint.at(3) == std::vector<std::int64_t>{3, 2});
  CHECK(s.giant_from_isolated[1] == doctest::Approx(0.75));
  CHECK(s.e_trace.at(3).mean == 2.5);
  TrajectorySummary c = a;
  c.steps = 4;
  const std::vector<TrajectorySummary> mixed{a, c};
  CHECK_THROWS(summarize(mixed));
}
