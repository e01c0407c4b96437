// mixgraph.cpp: command-line front end: simulate, solve, verify, report.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixgraph/harness/analysis.hpp"
#include "mixgraph/harness/config.hpp"
#include "mixgraph/harness/output.hpp"
#include "mixgraph/harness/runner.hpp"
#include "mixgraph/harness/suite.hpp"
#include "mixgraph/recurrence/solve.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using namespace mixgraph;
using namespace mixgraph::harness;

namespace {

// Values given on the command line for config keys.
struct KeyFlags {
  std::string config_file;
  std::map<std::string, std::string> values;

  void attach(CLI::App& app, const std::vector<std::string_view>& keys) {
    app.add_option("--config", config_file, "key = value document to load")->check(CLI::ExistingFile);
    for (auto key : keys) {
      std::string name(key);
      std::string dashed = name;
      std::replace(dashed.begin(), dashed.end(), '_', '-');
      std::string flags = "--" + name;
      if (dashed != name) flags += ",--" + dashed;
      app.add_option(flags, values[name], "overrides '" + name + "' from the config file");
    }
  }

  ConfigDocument document() const {
    ConfigDocument doc = config_file.empty() ? ConfigDocument{} : ConfigDocument::parse(read_text(config_file));
    for (const auto& [key, value] : values) {
      if (!value.empty()) doc.set(key, value);
    }
    return doc;
  }
};

std::string default_out_dir() {
  const char* env = std::getenv("MIXGRAPH_OUT_DIR");
  return env != nullptr && *env != '\0' ? env : "out";
}

Json predictions_json(ModelKind model, const ModelParams& params, const SolutionSet& sols) {
  const auto family = recurrence::family_for(model, params);
  const auto predicted = recurrence::predicted_exponent(family, params);
  Json j;
  j["family"] = std::string(recurrence::to_string(family));
  switch (predicted.kind) {
    case recurrence::TailDescriptor::Kind::PowerLaw:
      j["tail"] = "power-law";
      j["exponent"] = predicted.value;
      break;
    case recurrence::TailDescriptor::Kind::Geometric:
      j["tail"] = "geometric";
      j["ratio"] = predicted.value;
      break;
    case recurrence::TailDescriptor::Kind::Degenerate: j["tail"] = "degenerate"; break;
  }
  auto fitted = [&](const char* name, const std::optional<recurrence::RecurrenceSolution>& s) {
    if (!s) return;
    Json f;
    f["k_max"] = s->k_max;
    if (s->fitted_exponent) f["fitted_exponent"] = *s->fitted_exponent;
    if (s->fitted_ratio) f["fitted_ratio"] = *s->fitted_ratio;
    j["solutions"][name] = std::move(f);
  };
  fitted("lower", sols.lower);
  fitted("upper", sols.upper);
  fitted("plugin", sols.plugin);
  return j;
}

std::string edge_csv(const TrajectorySummary& run) {
  std::ostringstream os;
  os << "u,v\n";
  for (const auto& [u, v] : run.edges) os << u << ',' << v << '\n';
  return os.str();
}

int simulate(const KeyFlags& keys, unsigned threads, bool edge_dump, std::int64_t k_max) {
  RunConfig config = build_config(keys.document());
  if (edge_dump) {
    if (config.backend != Backend::Vertex) throw ConfigError(0, "--edge-dump needs the vertex backend");
    config.plan.edge_dump = true;
  }
  const fs::path out = config.out_dir;
  const auto start = std::chrono::steady_clock::now();
  const EnsembleRun run = run_ensemble(config, threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const SolutionSet sols = standard_solutions(config.model, config.params, &run.summary.increment_freq, k_max);
  write_text(out / "degree.csv", degree_csv(run.summary, sols));
  write_text(out / "increments.csv", increment_csv(run.summary));
  write_text(out / "trace.csv", trace_csv(run.summary));
  if (edge_dump) {
    for (std::size_t i = 0; i < run.runs.size(); ++i) {
      write_text(out / ("edges-" + std::to_string(i) + ".csv"), edge_csv(run.runs[i]));
    }
  }
  Json report;
  report["config"] = config_json(config);
  report["summary"] = summary_json(run.summary);
  report["predictions"] = predictions_json(config.model, config.params, sols);
  report["rng"] = rng_provenance(config);
  write_text(out / "summary.json", report.dump(2) + "\n");
  write_text(out / "timing.json", Json{{"seconds", seconds}, {"workers", plan_workers(config, threads)}}.dump(2) + "\n");
  std::cout << "wrote " << out.string() << ": " << run.summary.replicas << " replicas of " << run.summary.steps
            << " steps\n";
  return 0;
}

int solve(const KeyFlags& keys, const std::string& increments, std::int64_t k_max, const std::string& out_dir) {
  const ModelChoice choice = build_model(keys.document());
  std::optional<std::map<std::int64_t, double>> freq;
  if (!increments.empty()) freq = read_increment_csv(read_text(increments));
  const SolutionSet sols = standard_solutions(choice.model, choice.params, freq ? &*freq : nullptr, k_max);
  if (!sols.upper) {
    throw std::invalid_argument("pure copying has no stationary solution; use simulate or the master equation");
  }
  const fs::path out = out_dir;
  write_text(out / "solution.csv", solution_csv(sols));
  Json j;
  j["model"] = std::string(to_string(choice.model));
  j["params"] = {{"alpha", choice.params.alpha()},
                 {"mu", choice.params.mu()},
                 {"zeta", choice.params.zeta()},
                 {"nu", choice.params.nu()}};
  j["predictions"] = predictions_json(choice.model, choice.params, sols);
  if (!increments.empty()) j["increments"] = increments;
  write_text(out / "solution.json", j.dump(2) + "\n");
  std::cout << "wrote " << (out / "solution.csv").string() << '\n';
  return 0;
}

std::vector<int> parse_criteria(const std::string& text) {
  if (text == "all") return all_criteria();
  std::vector<int> ids;
  if (text.empty() || text == "none") return ids;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || id < 1 || id > 15) {
      throw std::invalid_argument("criteria must be ids in 1..15, got '" + item + "'");
    }
    ids.push_back(id);
  }
  return ids;
}

int verify(std::vector<int> criteria, bool negative_control, unsigned threads, std::uint64_t seed,
           const std::string& out_dir, bool quiet) {
  SuiteOptions options;
  options.criteria = std::move(criteria);
  options.negative_control = negative_control;
  options.threads = threads;
  options.seed = seed;
  if (!quiet) options.log = [](const std::string& m) { std::cerr << "[verify] " << m << '\n'; };
  const SuiteReport report = run_suite(options);

  const fs::path out = out_dir;
  write_text(out / "report.json", suite_json(report, options).dump(2) + "\n");
  write_text(out / "timing.json", timing_json(report).dump(2) + "\n");
  for (const auto& r : report.results) {
    for (const auto& [name, text] : r.artifacts) write_text(out / name, text);
  }
  for (const auto& r : report.results) {
    std::cout << (r.pass() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << '\n';
    for (const auto& v : r.verdicts) {
      std::cout << "      " << (v.pass ? "ok  " : "miss") << (v.gated ? "  " : " (ungated) ") << v.check
                << ": measured " << format_double(v.measured) << ", target " << format_double(v.target) << ' '
                << v.relation << ' ' << format_double(v.tolerance) << '\n';
    }
  }
  std::cout << (report.pass() ? "all criteria passed" : "some criteria failed") << '\n';
  return report.pass() ? 0 : 1;
}

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\";
    out += c;
  }
  return out;
}

int report(const std::vector<std::string>& inputs, const std::string& out_dir) {
  Json merged;
  merged["sources"] = Json::array();
  std::ostringstream md;
  md << "# mixgraph report\n";
  for (const auto& input : inputs) {
    const fs::path dir = input;
    Json entry;
    entry["source"] = dir.string();
    for (const char* name : {"report.json", "summary.json", "solution.json", "timing.json"}) {
      if (fs::exists(dir / name)) entry[fs::path(name).stem().string()] = Json::parse(read_text(dir / name));
    }
    if (entry.size() == 1) throw std::invalid_argument(dir.string() + " holds no mixgraph output");
    md << "\n## " << dir.string() << "\n";
    if (entry.contains("report")) {
      const auto& rep = entry["report"];
      md << "\nSuite " << (rep["pass"].get<bool>() ? "passed" : "failed") << ".\n\n"
         << "| criterion | check | anchor | measured | target | relation | tolerance | gated | pass |\n"
         << "|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : rep["criteria"]) {
        for (const auto& v : c["verdicts"]) {
          md << "| " << c["id"].get<int>() << " | " << md_escape(v["check"].get<std::string>()) << " | "
             << md_escape(v["anchor"].get<std::string>()) << " | " << v["measured"].dump() << " | "
             << v["target"].dump() << " | " << v["relation"].get<std::string>() << " | " << v["tolerance"].dump()
             << " | " << (v["gated"].get<bool>() ? "yes" : "no") << " | " << (v["pass"].get<bool>() ? "yes" : "no")
             << " |\n";
        }
      }
    }
    if (entry.contains("summary")) {
      const auto& s = entry["summary"];
      md << "\nEnsemble: model " << s["config"]["model"].get<std::string>() << ", T = " << s["config"]["steps"]
         << ", R = " << s["config"]["replicas"] << ".\n\n"
         << "- mean final edges: " << s["summary"]["final_edges"]["mean"] << "\n"
         << "- mean isolated vertices: " << s["summary"]["isolated"]["mean"] << "\n"
         << "- predicted tail: " << s["predictions"]["tail"].get<std::string>() << "\n";
    }
    if (entry.contains("solution")) {
      md << "\nRecurrence solution for model " << entry["solution"]["model"].get<std::string>() << ".\n";
    }
    merged["sources"].push_back(std::move(entry));
  }
  const fs::path out = out_dir;
  write_text(out / "report.json", merged.dump(2) + "\n");
  write_text(out / "report.md", md.str());
  std::cout << "wrote " << (out / "report.md").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixgraph: preferential, classical and copying graph growth against its recurrences"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "run one ensemble and write degree, increment and trace CSVs");
  KeyFlags sim_keys;
  sim_keys.attach(*sim, ConfigDocument::known_keys());
  unsigned sim_threads = 0;
  bool edge_dump = false;
  std::int64_t sim_k_max = 10000;
  sim->add_option("--threads", sim_threads, "worker threads (0 = all cores)");
  sim->add_flag("--edge-dump", edge_dump, "write each replica's final edge list (vertex backend)");
  sim->add_option("--k-max", sim_k_max, "largest class of the attached recurrence solutions")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{10000000}));

  auto* sol = app.add_subcommand("solve", "write lower, upper and plug-in stationary solutions");
  KeyFlags sol_keys;
  sol_keys.attach(*sol, {"model", "alpha", "mu", "zeta", "nu"});
  std::string increments;
  std::int64_t sol_k_max = 10000;
  std::string sol_out = default_out_dir();
  sol->add_option("--increments", increments, "k,frequency CSV for the plug-in forcing")->check(CLI::ExistingFile);
  sol->add_option("--k-max", sol_k_max, "largest solved class")->check(CLI::Range(std::int64_t{2}, std::int64_t{10000000}));
  sol->add_option("--out-dir,--out_dir", sol_out, "output directory");

  auto* ver = app.add_subcommand("verify", "run the acceptance suite; nonzero exit when a criterion fails");
  std::string criteria_text = "all";
  bool negative = false;
  bool quiet = false;
  unsigned ver_threads = 0;
  std::uint64_t ver_seed = kSuiteSeed;
  std::string ver_out = default_out_dir();
  ver->add_option("--criteria", criteria_text, "comma-separated ids in 1..15, 'all' (default) or 'none'");
  ver->add_flag("--negative-control", negative, "also gate on the deliberately wrong beta = 4 target");
  ver->add_option("--threads", ver_threads, "worker threads (0 = all cores)");
  ver->add_option("--seed", ver_seed, "suite master seed");
  ver->add_option("--out-dir,--out_dir", ver_out, "output directory");
  ver->add_flag("--quiet", quiet, "no progress log on stderr");

  auto* rep = app.add_subcommand("report", "merge earlier outputs into report.json and report.md");
  std::vector<std::string> inputs;
  std::string rep_out = default_out_dir();
  rep->add_option("inputs", inputs, "output directories of earlier commands")->required()->check(CLI::ExistingDirectory);
  rep->add_option("--out-dir,--out_dir", rep_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) return simulate(sim_keys, sim_threads, edge_dump, sim_k_max);
    if (*sol) return solve(sol_keys, increments, sol_k_max, sol_out);
    if (*ver) {
      return verify(parse_criteria(criteria_text), negative, ver_threads, ver_seed, ver_out, quiet);
    }
    if (*rep) return report(inputs, rep_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
