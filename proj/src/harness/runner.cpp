#include "mixgraph/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "mixgraph/core/rng.hpp"
#include "mixgraph/process/process.hpp"
#include "mixgraph/vertex/vertex_sim.hpp"

namespace mixgraph::harness {

ReplicaError::ReplicaError(std::int64_t index, std::uint64_t seed, const std::string& cause)
    : std::runtime_error("replica " + std::to_string(index) + " (seed " + std::to_string(seed) +
                         ") failed: " + cause),
      index_(index),
      seed_(seed) {}

unsigned plan_workers(const RunConfig& config, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  auto workers = static_cast<std::int64_t>(threads);
  workers = std::min(workers, config.replicas);
  const std::uint64_t per_replica = config.projected_replica_bytes();
  if (per_replica > 0) {
    const std::uint64_t cap = static_cast<std::uint64_t>(config.memory_cap_mb) * 1024 * 1024;
    workers = std::min<std::int64_t>(workers, static_cast<std::int64_t>(std::max<std::uint64_t>(1, cap / per_replica)));
  }
  return static_cast<unsigned>(std::max<std::int64_t>(1, workers));
}

TrajectorySummary run_replica(const RunConfig& config, std::int64_t index) {
  const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(index));
  if (config.backend == Backend::Vertex) {
    return vertex::run_vertex_process(config.params, config.model, config.steps, seed, config.plan);
  }
  return process::run_process(config.params, config.model, config.steps, seed, config.plan);
}

EnsembleRun run_ensemble(const RunConfig& config, unsigned threads) {
  EnsembleRun out;
  out.runs.resize(static_cast<std::size_t>(config.replicas));
  std::atomic<std::int64_t> next{0};
  std::mutex error_mutex;
  std::optional<ReplicaError> first_error;

  auto worker = [&] {
    while (true) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= config.replicas) return;
      try {
        out.runs[static_cast<std::size_t>(i)] = run_replica(config, i);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        // Keep the lowest failing index so the report is scheduling-independent.
        if (!first_error || i < first_error->index()) {
          first_error.emplace(i, derive_seed(config.seed, static_cast<std::uint64_t>(i)), e.what());
        }
      }
    }
  };

  const unsigned workers = plan_workers(config, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) throw *first_error;
  out.summary = stats::summarize(out.runs);
  return out;
}

}  // namespace mixgraph::harness
