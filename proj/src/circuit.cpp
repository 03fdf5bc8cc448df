#include "resqnet/circuit.hpp"

#include "resqnet/error.hpp"
#include "resqnet/rng.hpp"

#include <numbers>
#include <string>

namespace resqnet {

void LayerTemplate::expand(std::size_t first_param, std::vector<GateOp> &out) const {
  std::size_t p = first_param;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    out.push_back(GateOp::rx(q, p++));
    out.push_back(GateOp::ry(q, p++));
  }
  for (std::size_t q = 0; q + 1 < num_qubits; ++q) {
    out.push_back(GateOp::cnot(q, q + 1));
  }
}

CircuitSpec build_circuit(std::size_t num_qubits, std::size_t layer_depth) {
  if (num_qubits < 2) {
    throw InvalidArgument("build_circuit: need at least 2 qubits, got " +
                          std::to_string(num_qubits));
  }
  if (layer_depth < 1) {
    throw InvalidArgument("build_circuit: layer depth must be at least 1");
  }
  const LayerTemplate tmpl{num_qubits};
  std::vector<GateOp> gates;
  gates.reserve(tmpl.gates_per_layer() * layer_depth);
  for (std::size_t layer = 0; layer < layer_depth; ++layer) {
    tmpl.expand(layer * tmpl.params_per_layer(), gates);
  }
  return CircuitSpec(tmpl, layer_depth, std::move(gates), tmpl.params_per_layer() * layer_depth);
}

namespace {
void require_depth_defined(std::size_t layer_depth, std::size_t num_qubits) {
  if (num_qubits < 5) {
    throw InvalidArgument("effective depth is only defined from 5 qubits upward");
  }
  if (layer_depth < 1) {
    throw InvalidArgument("effective depth: layer depth must be at least 1");
  }
}
} // namespace

std::size_t effective_depth_total(std::size_t layer_depth, std::size_t num_qubits) {
  require_depth_defined(layer_depth, num_qubits);
  return 4 * layer_depth + (num_qubits - 3);
}

std::size_t effective_depth_per_node(std::size_t layer_depth_per_node, std::size_t num_qubits) {
  require_depth_defined(layer_depth_per_node, num_qubits);
  return 4 * layer_depth_per_node + (num_qubits - 3);
}

std::size_t effective_depth_split(std::span<const std::size_t> depth_split,
                                  std::size_t num_qubits) {
  if (depth_split.empty()) {
    throw InvalidArgument("effective depth: empty depth split");
  }
  std::size_t total = 0;
  for (auto d : depth_split) {
    total += effective_depth_per_node(d, num_qubits);
  }
  return total;
}

void run_gates(std::span<const GateOp> gates, std::span<const double> params,
               std::span<Complex> amps, std::size_t num_qubits) {
  for (const auto &g : gates) {
    apply_gate_unchecked(amps, num_qubits, g, g.param_index ? params[*g.param_index] : 0.0);
  }
}

Statevector bind_and_run(const CircuitSpec &circuit, std::span<const double> params,
                         Statevector input) {
  if (params.size() != circuit.num_params()) {
    throw InvalidArgument("bind_and_run: expected " + std::to_string(circuit.num_params()) +
                          " parameters, got " + std::to_string(params.size()));
  }
  if (input.num_qubits() != circuit.num_qubits()) {
    throw InvalidArgument("bind_and_run: circuit has " + std::to_string(circuit.num_qubits()) +
                          " qubits, input has " + std::to_string(input.num_qubits()));
  }
  run_gates(circuit.gates(), params, input.mutable_amplitudes(), input.num_qubits());
  return input;
}

ParameterVector random_parameters(std::size_t count, Rng &rng) {
  ParameterVector out(count);
  for (auto &v : out) {
    v = rng.uniform(0.0, std::numbers::pi);
  }
  return out;
}

nlohmann::json to_json(const CircuitSpec &circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto &g : circuit.gates()) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(g.kind));
    j["target"] = g.target;
    if (g.control) j["control"] = *g.control;
    if (g.param_index) j["param_index"] = *g.param_index;
    gates.push_back(std::move(j));
  }
  return {{"num_qubits", circuit.num_qubits()},
          {"layer_depth", circuit.layer_depth()},
          {"gates", std::move(gates)}};
}

} // namespace resqnet
