// Acceptance run: the full verification suite at the fixed suite seed, one line per criterion.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "mixgraph/harness/output.hpp"
#include "mixgraph/harness/suite.hpp"

using namespace mixgraph::harness;

int main(int argc, char** argv) {
  SuiteOptions options;
  options.criteria = all_criteria();
  options.seed = kSuiteSeed;
  options.log = [](const std::string& m) { std::cerr << "[acceptance] " << m << '\n'; };
  const SuiteReport report = run_suite(options);

  if (argc > 1) {
    const std::filesystem::path out = argv[1];
    write_text(out / "report.json", suite_json(report, options).dump(2) + "\n");
    write_text(out / "timing.json", timing_json(report).dump(2) + "\n");
    for (const auto& r : report.results) {
      for (const auto& [name, text] : r.artifacts) write_text(out / name, text);
    }
  }

  int failed = 0;
  for (const auto& r : report.results) {
    std::string worst;
    for (const auto& v : r.verdicts) {
      if (v.gated && !v.pass && worst.empty()) {
        worst = "  [" + v.check + ": measured " + format_double(v.measured) + ", target " + format_double(v.target) +
                " " + v.relation + " " + format_double(v.tolerance) + "]";
      }
    }
    std::printf("criterion %2d: %s  %s%s\n", r.id, r.pass() ? "PASS" : "FAIL", r.title.c_str(), worst.c_str());
    if (!r.pass()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(report.results.size()) - failed, report.results.size());
  return failed == 0 ? 0 : 1;
}
