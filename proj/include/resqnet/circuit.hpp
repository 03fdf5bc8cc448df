#pragma once

#include "resqnet/statevector.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace resqnet {

class Rng;

/// Rotation angles in radians, indexed by GateOp::param_index.
using ParameterVector = std::vector<double>;

/// One hardware-efficient layer: RX then RY on every qubit (0 to n-1),
/// followed by the CNOT staircase (i -> i+1), no wraparound.
struct LayerTemplate {
  std::size_t num_qubits;

  std::size_t params_per_layer() const noexcept { return 2 * num_qubits; }
  std::size_t cnots_per_layer() const noexcept { return num_qubits - 1; }
  std::size_t gates_per_layer() const noexcept { return params_per_layer() + cnots_per_layer(); }

  /// Appends one layer to `out`, numbering parameters from `first_param`.
  void expand(std::size_t first_param, std::vector<GateOp> &out) const;
};

class CircuitSpec {
public:
  const LayerTemplate &layer_template() const noexcept { return template_; }
  std::size_t num_qubits() const noexcept { return template_.num_qubits; }
  std::size_t layer_depth() const noexcept { return layer_depth_; }
  std::size_t num_params() const noexcept { return num_params_; }
  std::span<const GateOp> gates() const noexcept { return gates_; }

  friend CircuitSpec build_circuit(std::size_t num_qubits, std::size_t layer_depth);

private:
  CircuitSpec(LayerTemplate tmpl, std::size_t layer_depth, std::vector<GateOp> gates,
              std::size_t num_params)
      : template_(tmpl), layer_depth_(layer_depth), gates_(std::move(gates)),
        num_params_(num_params) {}

  LayerTemplate template_;
  std::size_t layer_depth_;
  std::vector<GateOp> gates_;
  std::size_t num_params_;
};

/// Requires num_qubits >= 2 and layer_depth >= 1.
CircuitSpec build_circuit(std::size_t num_qubits, std::size_t layer_depth);

/// 4 * layer_depth + k with k = num_qubits - 3 (defined for num_qubits >= 5).
std::size_t effective_depth_total(std::size_t layer_depth, std::size_t num_qubits);
std::size_t effective_depth_per_node(std::size_t layer_depth_per_node, std::size_t num_qubits);
/// Sum of the per-node effective depths over a depth split.
std::size_t effective_depth_split(std::span<const std::size_t> depth_split,
                                  std::size_t num_qubits);

/// Applies `gates` to `amps` in order, reading rotation angles from `params`.
/// Gates must already be validated.
void run_gates(std::span<const GateOp> gates, std::span<const double> params,
               std::span<Complex> amps, std::size_t num_qubits);

Statevector bind_and_run(const CircuitSpec &circuit, std::span<const double> params,
                         Statevector input);

/// Independent uniform draws from [0, pi].
ParameterVector random_parameters(std::size_t count, Rng &rng);

nlohmann::json to_json(const CircuitSpec &circuit);

} // namespace resqnet
