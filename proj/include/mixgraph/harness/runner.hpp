// runner.hpp: replica-parallel ensemble execution.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixgraph/core/trajectory.hpp"
#include "mixgraph/harness/config.hpp"
#include "mixgraph/stats/ensemble.hpp"

namespace mixgraph::harness {

// A replica threw; carries its index and derived seed.
class ReplicaError : public std::runtime_error {
 public:
  ReplicaError(std::int64_t index, std::uint64_t seed, const std::string& cause);
  std::int64_t index() const { return index_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::int64_t index_;
  std::uint64_t seed_;
};

struct EnsembleRun {
  std::vector<TrajectorySummary> runs;  // replica-index order
  stats::EnsembleSummary summary;
};

// Worker count: at most `threads`, at most R, and few enough that the
// projected vertex-backend memory stays under the cap.
unsigned plan_workers(const RunConfig& config, unsigned threads);

// One replica with seed derive_seed(config.seed, index).
TrajectorySummary run_replica(const RunConfig& config, std::int64_t index);

// Replicas are claimed from a shared counter and stored by index, so the
// result does not depend on scheduling or on `threads`. threads = 0 means
// hardware concurrency.
EnsembleRun run_ensemble(const RunConfig& config, unsigned threads = 0);

}  // namespace mixgraph::harness
