#include "resqnet/gradients.hpp"

#include "resqnet/error.hpp"
#include "resqnet/objective.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <string>

namespace resqnet {

namespace {

constexpr double kShift = std::numbers::pi / 2;

bool needs_check(const NetworkTopology &topology, ShiftCheck check) {
  switch (check) {
  case ShiftCheck::Always:
    return true;
  case ShiftCheck::Never:
    return false;
  case ShiftCheck::Auto:
    return topology.has_residual();
  }
  return true;
}

void check_step(double step) {
  if (!(step > 0.0 && step <= 1e-2)) {
    throw InvalidArgument("finite-difference step must lie in (0, 1e-2], got " +
                          std::to_string(step));
  }
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Cost with parameter `j` displaced by `delta`, resumed from the tape at the
// node that owns `j`. `scratch` is a private copy of the parameters.
double shifted_cost(const ForwardTape &tape, std::size_t node, std::vector<double> &scratch,
                    std::size_t j, double delta) {
  const double saved = scratch[j];
  scratch[j] = saved + delta;
  const double c = cost_of_state(tape.resume(node, scratch));
  scratch[j] = saved;
  return c;
}

PartialDerivative component(const NetworkTopology &topology, const ForwardTape &tape,
                            std::vector<double> &scratch, std::size_t j, bool check,
                            double step) {
  const std::size_t node = topology.node_of_param(j);
  const double shift = 0.5 * (shifted_cost(tape, node, scratch, j, kShift) -
                              shifted_cost(tape, node, scratch, j, -kShift));
  if (!check) return {shift, std::nullopt};
  const double fd = (shifted_cost(tape, node, scratch, j, step) -
                     shifted_cost(tape, node, scratch, j, -step)) /
                    (2 * step);
  if (shift_agrees(shift, fd)) return {shift, std::nullopt};
  return {fd, FallbackEvent{j, shift, fd}};
}

// Runs `body(j, scratch)` for every parameter index, in parallel, rethrowing
// the first failure (by parameter order) on the calling thread.
template <typename Body>
void for_each_param(std::size_t count, std::span<const double> params, int workers, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(thread_count(workers))
  {
    std::vector<double> scratch(params.begin(), params.end());
#pragma omp for schedule(dynamic)
    for (std::int64_t j = 0; j < n; ++j) {
      try {
        body(static_cast<std::size_t>(j), scratch);
      } catch (...) {
        errors[static_cast<std::size_t>(j)] = std::current_exception();
      }
    }
  }
  for (std::size_t j = 0; j < count; ++j) {
    if (!errors[j]) continue;
    try {
      std::rethrow_exception(errors[j]);
    } catch (const DegenerateSumError &) {
      throw;
    } catch (const std::exception &e) {
      throw Error("gradient evaluation failed at parameter " + std::to_string(j) + ": " +
                  e.what());
    }
  }
}

} // namespace

bool shift_agrees(double shift_value, double fd_value) {
  return std::abs(shift_value - fd_value) <= std::max(1e-6, 1e-4 * std::abs(fd_value));
}

GradientResult gradient_parameter_shift(const NetworkTopology &topology,
                                        std::span<const double> params,
                                        const GradientOptions &options) {
  check_step(options.fd_step);
  const ForwardTape tape(topology, params, zero_state(topology.num_qubits()));
  const bool check = needs_check(topology, options.check);
  const std::size_t count = params.size();

  std::vector<PartialDerivative> parts(count);
  for_each_param(count, params, options.workers, [&](std::size_t j, std::vector<double> &scratch) {
    parts[j] = component(topology, tape, scratch, j, check, options.fd_step);
  });

  GradientResult result;
  result.values.reserve(count);
  for (const auto &p : parts) {
    result.values.push_back(p.value);
    if (p.fallback) result.fallbacks.push_back(*p.fallback);
  }
  return result;
}

std::vector<double> gradient_finite_difference(const NetworkTopology &topology,
                                               std::span<const double> params, double step,
                                               int workers) {
  check_step(step);
  const ForwardTape tape(topology, params, zero_state(topology.num_qubits()));
  std::vector<double> out(params.size());
  for_each_param(params.size(), params, workers, [&](std::size_t j, std::vector<double> &scratch) {
    const std::size_t node = topology.node_of_param(j);
    out[j] = (shifted_cost(tape, node, scratch, j, step) -
              shifted_cost(tape, node, scratch, j, -step)) /
             (2 * step);
  });
  return out;
}

PartialDerivative partial_derivative(const NetworkTopology &topology,
                                     std::span<const double> params, std::size_t param_index,
                                     const GradientOptions &options) {
  check_step(options.fd_step);
  if (param_index >= params.size()) {
    throw InvalidArgument("partial_derivative: parameter index out of range");
  }
  const ForwardTape tape(topology, params, zero_state(topology.num_qubits()));
  std::vector<double> scratch(params.begin(), params.end());
  return component(topology, tape, scratch, param_index, needs_check(topology, options.check),
                   options.fd_step);
}

} // namespace resqnet
