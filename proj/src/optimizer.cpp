#include "resqnet/optimizer.hpp"

#include "resqnet/error.hpp"
#include "resqnet/objective.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace resqnet {

void validate(const AdamConfig &c) {
  if (!(c.alpha > 0.0)) throw InvalidArgument("adam: alpha must be positive");
  if (!(c.beta1 >= 0.0 && c.beta1 < 1.0)) throw InvalidArgument("adam: beta1 must lie in [0, 1)");
  if (!(c.beta2 >= 0.0 && c.beta2 < 1.0)) throw InvalidArgument("adam: beta2 must lie in [0, 1)");
  if (!(c.epsilon > 0.0)) throw InvalidArgument("adam: epsilon must be positive");
}

AdamState AdamState::zeros(std::size_t num_params, const AdamConfig &config) {
  validate(config);
  return {config, std::vector<double>(num_params, 0.0), std::vector<double>(num_params, 0.0), 0};
}

void adam_step(AdamState &state, std::span<double> params, std::span<const double> grad) {
  if (params.size() != grad.size() || state.m.size() != params.size() ||
      state.v.size() != params.size()) {
    throw InvalidArgument("adam_step: length mismatch (params " + std::to_string(params.size()) +
                          ", grad " + std::to_string(grad.size()) + ", state " +
                          std::to_string(state.m.size()) + ")");
  }
  const auto &c = state.config;
  state.t += 1;
  const double t = static_cast<double>(state.t);
  const double corr1 = 1.0 - std::pow(c.beta1, t);
  const double corr2 = 1.0 - std::pow(c.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grad[i];
    state.m[i] = c.beta1 * state.m[i] + (1.0 - c.beta1) * g;
    state.v[i] = c.beta2 * state.v[i] + (1.0 - c.beta2) * g * g;
    const double m_hat = state.m[i] / corr1;
    const double v_hat = state.v[i] / corr2;
    params[i] -= c.alpha / (std::sqrt(v_hat) + c.epsilon) * m_hat;
  }
}

namespace {
double l2(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}
} // namespace

TrainingTrace train(const NetworkTopology &topology, std::vector<double> init_params,
                    std::size_t steps, const AdamConfig &config,
                    const GradientOptions &gradient_options) {
  if (steps < 1) throw InvalidArgument("train: steps must be at least 1");
  if (init_params.size() != topology.num_params()) {
    throw InvalidArgument("train: expected " + std::to_string(topology.num_params()) +
                          " parameters, got " + std::to_string(init_params.size()));
  }
  using Clock = std::chrono::steady_clock;

  TrainingTrace trace;
  AdamState state = AdamState::zeros(init_params.size(), config);
  std::vector<double> params = std::move(init_params);
  try {
    for (std::size_t it = 0; it <= steps; ++it) {
      const auto start = Clock::now();
      const double c = cost(topology, params);
      auto grad = gradient_parameter_shift(topology, params, gradient_options);
      for (const auto &e : grad.fallbacks) trace.fallbacks.push_back({it, e});
      trace.costs.push_back(c);
      trace.grad_norms.push_back(l2(grad.values));
      if (it < steps) adam_step(state, params, grad.values);
      trace.seconds.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
  } catch (const DegenerateSumError &e) {
    trace.abort_reason = e.what();
  }
  trace.final_params = std::move(params);
  return trace;
}

} // namespace resqnet
