#include "mixgraph/harness/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mixgraph/core/rng.hpp"

namespace mixgraph::harness {

namespace {

std::string cell(const std::optional<recurrence::RecurrenceSolution>& s, std::int64_t k) {
  if (!s || k > s->k_max) return "";
  return format_double(s->at(k));
}

double lookup(const std::map<std::int64_t, double>& m, std::int64_t k) {
  auto it = m.find(k);
  return it == m.end() ? 0.0 : it->second;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

std::string degree_csv(const stats::EnsembleSummary& summary, const SolutionSet& solutions) {
  std::ostringstream os;
  os << "k,count_mean,fraction_mean,ci_half,d_lower,d_upper,d_plugin\n";
  const std::int64_t k_hi = summary.mean_fraction.empty() ? -1 : summary.mean_fraction.rbegin()->first;
  for (std::int64_t k = 0; k <= k_hi; ++k) {
    os << k << ',' << format_double(lookup(summary.mean_count, k)) << ','
       << format_double(lookup(summary.mean_fraction, k)) << ','
       << format_double(summary.ci_half.count(k) ? summary.ci_half.at(k)
                                                 : (summary.replicas > 1 ? 0.0 : std::nan("")))
       << ',' << cell(solutions.lower, k) << ',' << cell(solutions.upper, k) << ','
       << cell(solutions.plugin, k) << '\n';
  }
  return os.str();
}

std::string solution_csv(const SolutionSet& solutions) {
  std::int64_t k_max = -1;
  for (const auto* s : {&solutions.lower, &solutions.upper, &solutions.plugin}) {
    if (*s) k_max = std::max(k_max, (*s)->k_max);
  }
  std::ostringstream os;
  os << "k,d_lower,d_upper,d_plugin\n";
  for (std::int64_t k = 0; k <= k_max; ++k) {
    os << k << ',' << cell(solutions.lower, k) << ',' << cell(solutions.upper, k) << ','
       << cell(solutions.plugin, k) << '\n';
  }
  return os.str();
}

std::string increment_csv(const stats::EnsembleSummary& summary) {
  std::ostringstream os;
  os << "k,frequency\n";
  for (const auto& [k, f] : summary.increment_freq) os << k << ',' << format_double(f) << '\n';
  return os.str();
}

std::string trace_csv(const stats::EnsembleSummary& summary) {
  std::ostringstream os;
  os << "t,e_mean,e_min,e_max\n";
  for (const auto& [t, s] : summary.e_trace) {
    os << t << ',' << format_double(s.mean) << ',' << format_double(s.min) << ','
       << format_double(s.max) << '\n';
  }
  return os.str();
}

std::map<std::int64_t, double> read_increment_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("k,frequency", 0) != 0) {
    throw std::invalid_argument("increment CSV must start with the header 'k,frequency'");
  }
  std::map<std::int64_t, double> out;
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("increment CSV row " + std::to_string(row) + " lacks a comma");
    std::int64_t k = 0;
    double f = 0.0;
    const char* b = line.data();
    const char* e = line.data() + line.size();
    if (line.back() == '\r') --e;
    auto r1 = std::from_chars(b, b + comma, k);
    auto r2 = std::from_chars(b + comma + 1, e, f);
    if (r1.ec != std::errc() || r1.ptr != b + comma || r2.ec != std::errc() || r2.ptr != e) {
      throw std::invalid_argument("increment CSV row " + std::to_string(row) + " is malformed");
    }
    out[k] = f;
  }
  return out;
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["model"] = std::string(to_string(c.model));
  j["alpha"] = c.params.alpha();
  j["mu"] = c.params.mu();
  j["zeta"] = c.params.zeta();
  j["nu"] = c.params.nu();
  j["steps"] = c.steps;
  j["replicas"] = c.replicas;
  j["seed"] = c.seed;
  j["backend"] = std::string(to_string(c.backend));
  j["checkpoints"] = c.plan.checkpoints;
  j["increment_window"] = {c.plan.window_begin, c.plan.window_end};
  j["memory_cap_mb"] = c.memory_cap_mb;
  if (c.params.outside_proved_regime()) j["note"] = "mu > 2 lies outside the proved regime";
  return j;
}

nlohmann::ordered_json summary_json(const stats::EnsembleSummary& s) {
  nlohmann::ordered_json j;
  j["replicas"] = s.replicas;
  j["steps"] = s.steps;
  j["increment_samples"] = s.increment_samples;
  const auto spread = [](const std::vector<double>& v) {
    const auto sp = stats::spread_of(v);
    return nlohmann::ordered_json{{"mean", sp.mean}, {"sd", sp.sd}, {"min", sp.min}, {"max", sp.max}};
  };
  j["final_edges"] = spread(std::vector<double>(s.final_edges.begin(), s.final_edges.end()));
  j["isolated"] = spread(std::vector<double>(s.isolated.begin(), s.isolated.end()));
  j["max_degree"] = spread(std::vector<double>(s.max_degree.begin(), s.max_degree.end()));
  j["giant_fraction"] = spread(s.giant);
  return j;
}

nlohmann::ordered_json rng_provenance(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["engine"] = "std::mt19937_64";
  j["replica_seed"] = "splitmix64 finalizer of master ^ (index * 0x9E3779B97F4A7C15)";
  j["master_seed"] = c.seed;
  j["first_replica_seed"] = derive_seed(c.seed, 0);
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mixgraph::harness
