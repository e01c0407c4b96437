#include "mixgraph/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "mixgraph/vertex/vertex_sim.hpp"

namespace mixgraph::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const ConfigDocument::Entry& entry, std::string_view key) {
  T value{};
  const std::string& s = entry.value;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(entry.line, std::string(key) + ": cannot read '" + s + "' as a number");
  }
  return value;
}

std::vector<std::int64_t> parse_list(const ConfigDocument::Entry& entry, std::string_view key) {
  std::vector<std::int64_t> out;
  std::string_view rest = entry.value;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    out.push_back(parse_number<std::int64_t>({std::string(item), entry.line}, key));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::Histogram ? "histogram" : "vertex";
}

ConfigError::ConfigError(int line, const std::string& message)
    : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + message
                                     : "command line: " + message),
      line_(line) {}

const std::vector<std::string_view>& ConfigDocument::known_keys() {
  static const std::vector<std::string_view> keys{
      "model", "alpha",       "mu",          "zeta",             "nu",      "steps", "replicas",
      "seed",  "backend",     "checkpoints", "increment_window", "out_dir", "memory_cap_mb"};
  return keys;
}

ConfigDocument ConfigDocument::parse(std::string_view text) {
  ConfigDocument doc;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) throw ConfigError(line_no, key + ": empty value");
    if (doc.entries_.count(key) != 0) throw ConfigError(line_no, "duplicate key '" + key + "'");
    doc.entries_[key] = {value, line_no};
  }
  return doc;
}

void ConfigDocument::set(const std::string& key, std::string value) {
  const auto& keys = known_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError(0, "unknown key '" + key + "'");
  entries_[key] = {std::move(value), 0};
}

const ConfigDocument::Entry* ConfigDocument::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::uint64_t RunConfig::projected_replica_bytes() const {
  if (backend != Backend::Vertex) return 0;
  return vertex::projected_vertex_bytes(model, params, steps,
                                        vertex::needs_adjacency(model) || plan.edge_dump);
}

ModelChoice build_model(const ConfigDocument& doc) {
  auto require = [&](std::string_view key) -> const ConfigDocument::Entry& {
    const auto* e = doc.find(key);
    if (e == nullptr) throw ConfigError(0, "missing required key '" + std::string(key) + "'");
    return *e;
  };
  auto number = [&](std::string_view key, double fallback) {
    const auto* e = doc.find(key);
    return e ? parse_number<double>(*e, key) : fallback;
  };
  auto line_of = [&](std::string_view key) {
    const auto* e = doc.find(key);
    return e ? e->line : 0;
  };

  ModelChoice cfg;
  const auto& model_entry = require("model");
  try {
    cfg.model = parse_model_kind(model_entry.value);
  } catch (const std::invalid_argument&) {
    throw ConfigError(model_entry.line, "model must be one of ba, classical, mixed, hardcopy");
  }

  const double mu = number("mu", 1.0);
  const double zeta = number("zeta", mu);
  const double nu = number("nu", 0.1);
  const auto* alpha_entry = doc.find("alpha");
  double alpha = 0.0;
  switch (cfg.model) {
    case ModelKind::Ba: alpha = 1.0; break;
    case ModelKind::Classical: alpha = 0.0; break;
    case ModelKind::Mixed:
    case ModelKind::HardCopy:
      if (alpha_entry == nullptr) {
        throw ConfigError(model_entry.line, "model " + model_entry.value + " requires alpha");
      }
      break;
  }
  if (alpha_entry != nullptr) {
    const double given = parse_number<double>(*alpha_entry, "alpha");
    if (!(given >= 0.0 && given <= 1.0)) throw ConfigError(alpha_entry->line, "alpha must lie in [0, 1]");
    if ((cfg.model == ModelKind::Ba && given != 1.0) || (cfg.model == ModelKind::Classical && given != 0.0)) {
      throw ConfigError(alpha_entry->line, "alpha is fixed by model " + model_entry.value);
    }
    alpha = given;
  }
  try {
    switch (cfg.model) {
      case ModelKind::Ba: cfg.params = ModelParams::ba(mu, nu); break;
      case ModelKind::Classical:
        cfg.params = ModelParams::classical(zeta, nu);
        break;
      case ModelKind::Mixed: cfg.params = ModelParams::mixed(alpha, mu, zeta, nu); break;
      case ModelKind::HardCopy: cfg.params = ModelParams::hard_copy(alpha, mu, nu); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::max({line_of("mu"), line_of("zeta"), line_of("nu"), line_of("alpha")}), e.what());
  }
  return cfg;
}

RunConfig build_config(const ConfigDocument& doc) {
  auto require = [&](std::string_view key) -> const ConfigDocument::Entry& {
    const auto* e = doc.find(key);
    if (e == nullptr) throw ConfigError(0, "missing required key '" + std::string(key) + "'");
    return *e;
  };
  auto line_of = [&](std::string_view key) {
    const auto* e = doc.find(key);
    return e ? e->line : 0;
  };

  RunConfig cfg;
  const ModelChoice choice = build_model(doc);
  cfg.model = choice.model;
  cfg.params = choice.params;

  const auto& steps_entry = require("steps");
  cfg.steps = parse_number<std::int64_t>(steps_entry, "steps");
  if (cfg.steps < 1) throw ConfigError(steps_entry.line, "steps must be at least 1");
  cfg.seed = parse_number<std::uint64_t>(require("seed"), "seed");
  if (const auto* e = doc.find("replicas")) {
    cfg.replicas = parse_number<std::int64_t>(*e, "replicas");
    if (cfg.replicas < 1) throw ConfigError(e->line, "replicas must be at least 1");
  }

  cfg.backend = cfg.model == ModelKind::HardCopy ? Backend::Vertex : Backend::Histogram;
  if (const auto* e = doc.find("backend")) {
    if (e->value == "histogram") {
      cfg.backend = Backend::Histogram;
    } else if (e->value == "vertex") {
      cfg.backend = Backend::Vertex;
    } else {
      throw ConfigError(e->line, "backend must be histogram or vertex");
    }
    if (cfg.model == ModelKind::HardCopy && cfg.backend == Backend::Histogram) {
      throw ConfigError(e->line, "hardcopy requires vertex backend");
    }
  }

  cfg.plan = ObservationPlan::defaults(cfg.steps);
  if (const auto* e = doc.find("checkpoints")) {
    cfg.plan.checkpoints = parse_list(*e, "checkpoints");
    std::sort(cfg.plan.checkpoints.begin(), cfg.plan.checkpoints.end());
    cfg.plan.checkpoints.erase(std::unique(cfg.plan.checkpoints.begin(), cfg.plan.checkpoints.end()),
                               cfg.plan.checkpoints.end());
    for (auto c : cfg.plan.checkpoints) {
      if (c < 1 || c > cfg.steps) throw ConfigError(e->line, "checkpoint " + std::to_string(c) + " outside [1, steps]");
    }
  }
  if (const auto* e = doc.find("increment_window")) {
    const auto w = parse_list(*e, "increment_window");
    if (w.size() != 2 || w[0] < 1 || w[0] > w[1] || w[1] > cfg.steps) {
      throw ConfigError(e->line, "increment_window must be 'begin, end' with 1 <= begin <= end <= steps");
    }
    cfg.plan.window_begin = w[0];
    cfg.plan.window_end = w[1];
  }

  if (const auto* e = doc.find("out_dir")) {
    cfg.out_dir = e->value;
  } else if (const char* env = std::getenv("MIXGRAPH_OUT_DIR"); env != nullptr && *env != '\0') {
    cfg.out_dir = env;
  }
  if (const auto* e = doc.find("memory_cap_mb")) {
    cfg.memory_cap_mb = parse_number<std::int64_t>(*e, "memory_cap_mb");
    if (cfg.memory_cap_mb < 1) throw ConfigError(e->line, "memory_cap_mb must be positive");
  }
  const auto bytes = cfg.projected_replica_bytes();
  if (bytes > static_cast<std::uint64_t>(cfg.memory_cap_mb) * 1024 * 1024) {
    throw ConfigError(line_of("memory_cap_mb"),
                      "one vertex-backend replica needs about " + std::to_string(bytes >> 20) +
                          " MB, above memory_cap_mb = " + std::to_string(cfg.memory_cap_mb));
  }
  return cfg;
}

RunConfig parse_config(std::string_view text) { return build_config(ConfigDocument::parse(text)); }

std::string render_config(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "model = " << to_string(c.model) << '\n'
     << "alpha = " << c.params.alpha() << '\n'
     << "mu = " << c.params.mu() << '\n'
     << "zeta = " << c.params.zeta() << '\n'
     << "nu = " << c.params.nu() << '\n'
     << "steps = " << c.steps << '\n'
     << "replicas = " << c.replicas << '\n'
     << "seed = " << c.seed << '\n'
     << "backend = " << to_string(c.backend) << '\n'
     << "checkpoints = ";
  for (std::size_t i = 0; i < c.plan.checkpoints.size(); ++i) os << (i ? "," : "") << c.plan.checkpoints[i];
  os << '\n'
     << "increment_window = " << c.plan.window_begin << "," << c.plan.window_end << '\n'
     << "out_dir = " << c.out_dir << '\n'
     << "memory_cap_mb = " << c.memory_cap_mb << '\n';
  return os.str();
}

}  // namespace mixgraph::harness
