#include "mixgraph/core/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixgraph {

ObservationPlan ObservationPlan::defaults(std::int64_t steps) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  ObservationPlan plan;
  for (std::int64_t div : {16, 8, 4, 2, 1}) {
    const std::int64_t t = std::max<std::int64_t>(1, steps / div);
    if (plan.checkpoints.empty() || plan.checkpoints.back() != t) plan.checkpoints.push_back(t);
  }
  plan.window_begin = std::max<std::int64_t>(1, steps / 2);
  plan.window_end = steps;
  return plan;
}

}  // namespace mixgraph
