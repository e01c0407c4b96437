// suite.hpp: the theory-vs-simulation verification suite.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace mixgraph::harness {

// One checked claim. `relation` is one of "abs_within" (|measured - target| <=
// tolerance), "rel_within" (|measured / target - 1| <= tolerance), "<=" and
// ">=" (measured against target + or - tolerance) and the strict "<". Rows
// with gated = false are reported but do not decide the criterion.
struct Verdict {
  std::string check;
  std::string anchor;
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  std::string relation;
  bool pass = false;
  bool gated = true;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Verdict> verdicts;
  // Relative file name -> content, written under the output directory.
  std::map<std::string, std::string> artifacts;
  // Config echo, RNG provenance and analytic predictions behind the verdicts.
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double seconds = 0.0;

  // True when every gated verdict passes and at least one exists.
  bool pass() const;
};

struct SuiteOptions {
  std::vector<int> criteria;  // subset of 1..15, ascending; empty runs nothing
  bool negative_control = false;  // add the deliberately wrong target as its own criterion
  unsigned threads = 0;           // 0 = hardware concurrency
  std::uint64_t seed = 0;
  std::function<void(const std::string&)> log;
};

// Master seed of the default suite.
inline constexpr std::uint64_t kSuiteSeed = 20240611;

// Id of the standalone negative-control criterion.
inline constexpr int kNegativeControlId = 0;

std::vector<int> all_criteria();

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool pass() const;
};

SuiteReport run_suite(const SuiteOptions& options);

// Deterministic rendering of the verdict tables (no timing).
nlohmann::ordered_json suite_json(const SuiteReport& report, const SuiteOptions& options);

// Wall-clock seconds per criterion.
nlohmann::ordered_json timing_json(const SuiteReport& report);

}  // namespace mixgraph::harness
