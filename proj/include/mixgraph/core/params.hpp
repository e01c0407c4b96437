// params.hpp: process parameters shared by every backend.
#pragma once

#include <cstdint>
#include <string_view>

namespace mixgraph {

// Which growth rule drives a run. Pure copying is HardCopy with alpha = 1.
enum class ModelKind { Ba, Classical, Mixed, HardCopy };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

// alpha: probability of the preferential (or copying) manner at a step.
// mu:    preferential edge rate; also the classical rate of the copy model.
// zeta:  classical edge rate of the mixed model.
// nu:    small exponent used by the degree-bound checks.
class ModelParams {
 public:
  ModelParams(double alpha, double mu, double zeta, double nu = 0.1);

  static ModelParams ba(double mu, double nu = 0.1);
  static ModelParams classical(double zeta, double nu = 0.1);
  static ModelParams mixed(double alpha, double mu, double zeta, double nu = 0.1);
  static ModelParams hard_copy(double alpha, double mu, double nu = 0.1);

  double alpha() const { return alpha_; }
  double mu() const { return mu_; }
  double zeta() const { return zeta_; }
  double nu() const { return nu_; }

  // Mean number of edges added per step once the rates stop being capped.
  double xi() const { return alpha_ * mu_ + (1.0 - alpha_) * zeta_; }

  // mu > 2 is accepted but lies outside the range where the tail results are proved.
  bool outside_proved_regime() const { return mu_ > 2.0; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  double alpha_;
  double mu_;
  double zeta_;
  double nu_;
};

}  // namespace mixgraph
