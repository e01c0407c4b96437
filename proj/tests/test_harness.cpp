// Configuration, ensemble execution, artifacts and the suite plumbing.
#include <string>

#include "doctest.h"
#include "mixgraph/harness/config.hpp"
#include "mixgraph/harness/output.hpp"
#include "mixgraph/harness/runner.hpp"
#include "mixgraph/harness/suite.hpp"
#include "mixgraph/process/process.hpp"

using namespace mixgraph;
using namespace mixgraph::harness;

namespace {

int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

std::string error_text(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("config happy path fills defaults") {
  const auto c = parse_config("model=ba\nmu=1.0\nsteps=100000\nreplicas=50\nseed=42\nbackend=histogram");
  CHECK(c.model == ModelKind::Ba);
  CHECK(c.params == ModelParams::ba(1.0));
  CHECK(c.steps == 100000);
  CHECK(c.replicas == 50);
  CHECK(c.seed == 42);
  CHECK(c.backend == Backend::Histogram);
  CHECK(c.plan.checkpoints == std::vector<std::int64_t>{6250, 12500, 25000, 50000, 100000});
  CHECK(c.plan.window_begin == 50000);
  CHECK(c.plan.window_end == 100000);
  CHECK(c.memory_cap_mb == 4096);
  CHECK(parse_config("model = hardcopy\nalpha = 0.4\nsteps = 10\nseed = 1\n").backend == Backend::Vertex);
  CHECK(parse_config("model = mixed # comment\nalpha = 0.5\nzeta = 2\nsteps = 10\nseed = 1\n").params ==
        ModelParams::mixed(0.5, 1.0, 2.0));
}

TEST_CASE("config errors carry line numbers") {
  CHECK(error_text("model = hardcopy\nalpha = 0.4\nbackend = histogram\nsteps = 10\nseed = 1\n")
            .find("hardcopy requires vertex backend") != std::string::npos);
  CHECK(error_line("model = hardcopy\nalpha = 0.4\nbackend = histogram\nsteps = 10\nseed = 1\n") == 3);
  CHECK(error_line("model = mixed\nsteps = 10\nseed = 1\nalpha=1.5\n") == 4);
  CHECK(error_text("model = mixed\nsteps = 10\nseed = 1\nalpha=1.5\n").find("[0, 1]") != std::string::npos);
  CHECK(error_line("model = ba\nsteps = 10\nseed = 1\nmuu = 2\n") == 4);
  CHECK(error_line("model = ba\nsteps = 10\nsteps = 11\nseed = 1\n") == 3);
  CHECK(error_line("model = ba\nsteps = ten\nseed = 1\n") == 2);
  CHECK(error_line("model = ba\nsteps = 0\nseed = 1\n") == 2);
  CHECK(error_line("model = ba\nsteps = 10\nseed = 1\nreplicas = 0\n") == 4);
  CHECK(error_line("model = ba\nsteps = 10\nseed = 1\nbackend = gpu\n") == 4);
  CHECK(error_line("model = ba\nsteps = 10\nseed = 1\ncheckpoints = 5, 11\n") == 4);
  CHECK(error_line("model = ba\nsteps = 10\nseed = 1\nincrement_window = 7, 3\n") == 4);
  CHECK(error_line("model = ba\nalpha = 0.5\nsteps = 10\nseed = 1\n") == 2);
  CHECK(error_line("no equals sign\n") == 1);
  CHECK(error_text("model = ba\nseed = 1\n").find("steps") != std::string::npos);
  CHECK(error_text("model = mixed\nsteps = 10\nseed = 1\n").find("requires alpha") != std::string::npos);
  CHECK(error_text("model = hardcopy\nalpha = 1\nsteps = 30000\nseed = 1\nmemory_cap_mb = 1\n")
            .find("memory_cap_mb") != std::string::npos);
}

TEST_CASE("overrides replace file values and render round-trips") {
  auto doc = ConfigDocument::parse("model = ba\nsteps = 10\nseed = 1\n");
  doc.set("steps", "20");
  doc.set("mu", "1.5");
  const auto c = build_config(doc);
  CHECK(c.steps == 20);
  CHECK(c.params.mu() == 1.5);
  CHECK_THROWS_AS(doc.set("colour", "red"), ConfigError);
  const auto again = parse_config(render_config(c));
  CHECK(again.params == c.params);
  CHECK(again.steps == c.steps);
  CHECK(again.plan.checkpoints == c.plan.checkpoints);
  CHECK(again.plan.window_begin == c.plan.window_begin);
}

TEST_CASE("a one-replica ensemble equals a direct run with the derived seed") {
  const auto c = parse_config("model = mixed\nalpha = 0.5\nsteps = 3000\nseed = 77\n");
  const auto ens = run_ensemble(c, 1);
  REQUIRE(ens.runs.size() == 1);
  const auto direct = process::run_process(c.params, c.model, c.steps, derive_seed(77, 0), c.plan);
  CHECK(ens.runs[0].final_counts == direct.final_counts);
  CHECK(ens.runs[0].final_edge_count == direct.final_edge_count);
  CHECK(ens.runs[0].increment_counts == direct.increment_counts);
}

TEST_CASE("ensemble output does not depend on the thread count") {
  for (const char* text : {"model = ba\nsteps = 2000\nreplicas = 7\nseed = 5\n",
                           "model = hardcopy\nalpha = 0.5\nsteps = 500\nreplicas = 5\nseed = 6\n"}) {
    const auto c = parse_config(text);
    const auto one = run_ensemble(c, 1);
    const auto three = run_ensemble(c, 3);
    CHECK(degree_csv(one.summary, {}) == degree_csv(three.summary, {}));
    CHECK(increment_csv(one.summary) == increment_csv(three.summary));
    CHECK(trace_csv(one.summary) == trace_csv(three.summary));
    CHECK(summary_json(one.summary).dump() == summary_json(three.summary).dump());
  }
}

TEST_CASE("replica failures name the replica and its seed") {
  auto c = parse_config("model = ba\nsteps = 100\nreplicas = 4\nseed = 3\n");
  c.plan.checkpoints = {500};
  try {
    run_ensemble(c, 2);
    FAIL("expected a replica error");
  } catch (const ReplicaError& e) {
    CHECK(e.index() == 0);
    CHECK(e.seed() == derive_seed(3, 0));
  }
}

TEST_CASE("worker planning respects the memory cap") {
  auto c = parse_config("model = hardcopy\nalpha = 0.5\nsteps = 1000\nreplicas = 8\nseed = 1\n");
  CHECK(plan_workers(c, 4) == 4);
  CHECK(plan_workers(c, 16) == 8);
  c.memory_cap_mb = 0;
  CHECK(plan_workers(c, 4) == 1);
}

TEST_CASE("artifact schemas") {
  const auto c = parse_config("model = ba\nsteps = 200\nreplicas = 3\nseed = 2\n");
  const auto ens = run_ensemble(c, 1);
  const auto degree = degree_csv(ens.summary, {});
  CHECK(degree.rfind("k,count_mean,fraction_mean,ci_half,d_lower,d_upper,d_plugin\n", 0) == 0);
  const auto inc = increment_csv(ens.summary);
  CHECK(inc.rfind("k,frequency\n", 0) == 0);
  CHECK(trace_csv(ens.summary).rfind("t,e_mean,e_min,e_max\n", 0) == 0);
  const auto back = read_increment_csv(inc);
  CHECK(back.size() == ens.summary.increment_freq.size());
  for (const auto& [k, f] : ens.summary.increment_freq) CHECK(back.at(k) == f);
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("suite plumbing") {
  SuiteOptions none;
  const auto empty = run_suite(none);
  CHECK(empty.results.empty());
  CHECK(empty.pass());
  CHECK(suite_json(empty, none)["criteria"].empty());

  SuiteOptions bad;
  bad.criteria = {16};
  CHECK_THROWS_AS(run_suite(bad), std::invalid_argument);

  SuiteOptions one;
  one.criteria = {1};
  one.seed = kSuiteSeed;
  const auto report = run_suite(one);
  REQUIRE(report.results.size() == 1);
  CHECK(report.results[0].id == 1);
  CHECK(report.pass());
  const auto j = suite_json(report, one);
  for (const auto& v : j["criteria"][0]["verdicts"]) {
    CHECK_FALSE(v["anchor"].get<std::string>().empty());
    for (const char* key : {"anchor", "measured", "target", "tolerance", "pass"}) CHECK(v.contains(key));
  }
  CHECK(all_criteria().size() == 15);
}
