// config.hpp: run configuration: key = value documents, overrides and validation.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixgraph/core/params.hpp"
#include "mixgraph/core/trajectory.hpp"

namespace mixgraph::harness {

enum class Backend { Histogram, Vertex };

std::string_view to_string(Backend backend);

// Raised for malformed or invalid configuration; line 0 means a command-line override.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Raw key/value pairs with the line each came from.
class ConfigDocument {
 public:
  struct Entry {
    std::string value;
    int line = 0;
  };

  static const std::vector<std::string_view>& known_keys();

  // Parses `key = value` lines; `#` starts a comment. Unknown and repeated keys are errors.
  static ConfigDocument parse(std::string_view text);

  // Command-line override; replaces any value from the file.
  void set(const std::string& key, std::string value);

  const Entry* find(std::string_view key) const;
  const std::map<std::string, Entry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

struct RunConfig {
  ModelKind model = ModelKind::Ba;
  ModelParams params = ModelParams::ba(1.0);
  std::int64_t steps = 0;
  std::int64_t replicas = 1;
  std::uint64_t seed = 0;
  Backend backend = Backend::Histogram;
  ObservationPlan plan;
  std::string out_dir = "out";
  std::int64_t memory_cap_mb = 4096;

  // Peak bytes of one replica on the vertex backend; 0 for the histogram backend.
  std::uint64_t projected_replica_bytes() const;
};

struct ModelChoice {
  ModelKind model = ModelKind::Ba;
  ModelParams params = ModelParams::ba(1.0);
};

// Model kind and parameters only; the keys model, alpha, mu, zeta and nu.
ModelChoice build_model(const ConfigDocument& doc);

// Builds and validates a RunConfig. Required keys: model, steps, seed; mixed and
// hardcopy also need alpha. Defaults: mu = 1, zeta = mu, nu = 0.1, replicas = 1,
// backend = vertex for hardcopy and histogram otherwise, checkpoints
// {T/16, T/8, T/4, T/2, T}, increment_window = [T/2, T), out_dir from
// MIXGRAPH_OUT_DIR or "out", memory_cap_mb = 4096.
RunConfig build_config(const ConfigDocument& doc);

RunConfig parse_config(std::string_view text);

// Canonical key = value rendering, readable by parse_config.
std::string render_config(const RunConfig& config);

}  // namespace mixgraph::harness
