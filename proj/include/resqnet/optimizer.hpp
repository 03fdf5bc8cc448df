#pragma once

#include "resqnet/gradients.hpp"
#include "resqnet/network.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace resqnet {

struct AdamConfig {
  double alpha = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Throws InvalidArgument if a hyperparameter is out of range.
void validate(const AdamConfig &config);

struct AdamState {
  AdamConfig config;
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;

  static AdamState zeros(std::size_t num_params, const AdamConfig &config = {});
};

/// One Adam update in place. Bias corrections use the incremented step count.
void adam_step(AdamState &state, std::span<double> params, std::span<const double> grad);

struct TraceFallback {
  std::size_t iteration;
  FallbackEvent event;
};

/// costs[i] is the cost after i updates (costs[0] is the initial cost);
/// grad_norms[i] is the gradient norm at the same parameters.
struct TrainingTrace {
  std::vector<double> costs;
  std::vector<double> grad_norms;
  std::vector<double> seconds;
  std::vector<TraceFallback> fallbacks;
  std::vector<double> final_params;
  /// Set when the run stopped early (e.g. degenerate residual sum).
  std::optional<std::string> abort_reason;

  std::size_t iterations() const noexcept { return costs.size(); }
};

TrainingTrace train(const NetworkTopology &topology, std::vector<double> init_params,
                    std::size_t steps, const AdamConfig &config = {},
                    const GradientOptions &gradient_options = {});

} // namespace resqnet
