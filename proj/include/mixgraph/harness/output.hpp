// output.hpp: CSV and JSON artifacts of ensembles and recurrence solutions.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "mixgraph/harness/config.hpp"
#include "mixgraph/recurrence/solve.hpp"
#include "mixgraph/stats/ensemble.hpp"

namespace mixgraph::harness {

// Shortest round-trip decimal form; "nan" and "inf" spelled out.
std::string format_double(double value);

// Lower, upper and plug-in stationary solutions for one model.
struct SolutionSet {
  std::optional<recurrence::RecurrenceSolution> lower;
  std::optional<recurrence::RecurrenceSolution> upper;
  std::optional<recurrence::RecurrenceSolution> plugin;
};

// k,count_mean,fraction_mean,ci_half,d_lower,d_upper,d_plugin for every k
// observed in the ensemble; missing solution entries are left empty.
std::string degree_csv(const stats::EnsembleSummary& summary, const SolutionSet& solutions);

// k,d_lower,d_upper,d_plugin for k = 0..k_max.
std::string solution_csv(const SolutionSet& solutions);

// k,frequency
std::string increment_csv(const stats::EnsembleSummary& summary);

// t,e_mean,e_min,e_max
std::string trace_csv(const stats::EnsembleSummary& summary);

// Reads k,frequency rows (header required).
std::map<std::int64_t, double> read_increment_csv(const std::string& text);

nlohmann::ordered_json config_json(const RunConfig& config);
nlohmann::ordered_json summary_json(const stats::EnsembleSummary& summary);
nlohmann::ordered_json rng_provenance(const RunConfig& config);

// Creates missing parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace mixgraph::harness
