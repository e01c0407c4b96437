#include "mixgraph/core/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mixgraph {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Ba: return "ba";
    case ModelKind::Classical: return "classical";
    case ModelKind::Mixed: return "mixed";
    case ModelKind::HardCopy: return "hardcopy";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "ba") return ModelKind::Ba;
  if (name == "classical") return ModelKind::Classical;
  if (name == "mixed") return ModelKind::Mixed;
  if (name == "hardcopy") return ModelKind::HardCopy;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (expected ba, classical, mixed or hardcopy)");
}

ModelParams::ModelParams(double alpha, double mu, double zeta, double nu)
    : alpha_(alpha), mu_(mu), zeta_(zeta), nu_(nu) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be positive, got " + std::to_string(mu));
  }
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    throw std::invalid_argument("zeta must be positive, got " + std::to_string(zeta));
  }
  if (!(nu > 0.0 && nu < 1.0)) {
    throw std::invalid_argument("nu must lie in (0, 1), got " + std::to_string(nu));
  }
}

ModelParams ModelParams::ba(double mu, double nu) { return {1.0, mu, mu, nu}; }

ModelParams ModelParams::classical(double zeta, double nu) { return {0.0, zeta, zeta, nu}; }

ModelParams ModelParams::mixed(double alpha, double mu, double zeta, double nu) {
  return {alpha, mu, zeta, nu};
}

ModelParams ModelParams::hard_copy(double alpha, double mu, double nu) {
  return {alpha, mu, mu, nu};
}

}  // namespace mixgraph
