#pragma once

#include "resqnet/circuit.hpp"
#include "resqnet/statevector.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace resqnet {

struct QuantumNode {
  CircuitSpec circuit;
  std::size_t param_offset;
};

enum class NetworkKind { SimplePlain, Plain, ResQNet };

std::string_view to_string(NetworkKind kind);

/// Residual sums are always renormalized; a sum whose norm falls below
/// `tolerance` is reported as a DegenerateSumError.
struct ResidualAdditionPolicy {
  double tolerance = 1e-12;
};

/// Ordered cascade of quantum nodes. A residual point i means: after node i,
/// the input of the current residual segment is added to the node output, the
/// sum is normalized, and it becomes the input of the next segment.
class NetworkTopology {
public:
  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t num_params() const noexcept { return num_params_; }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::span<const QuantumNode> nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t> &depth_split() const noexcept { return depth_split_; }
  const std::vector<std::size_t> &residual_points() const noexcept { return residual_points_; }
  bool residual_after(std::size_t node) const noexcept { return residual_flags_[node]; }
  bool has_residual() const noexcept { return !residual_points_.empty(); }
  NetworkKind kind() const noexcept;

  /// Index of the node owning global parameter `param`.
  std::size_t node_of_param(std::size_t param) const;

  /// e.g. "res_5-1_r0", "plain_3-3", "simple_7"
  std::string label() const;

  friend NetworkTopology make_topology(std::size_t num_qubits,
                                       std::span<const std::size_t> depth_split,
                                       std::span<const std::size_t> residual_points);

private:
  NetworkTopology() = default;

  std::size_t num_qubits_ = 0;
  std::size_t num_params_ = 0;
  std::vector<QuantumNode> nodes_;
  std::vector<std::size_t> depth_split_;
  std::vector<std::size_t> residual_points_;
  std::vector<bool> residual_flags_;
};

/// One node per entry of `depth_split`, parameters laid out contiguously.
/// Residual indices must be < node count; duplicates are merged.
NetworkTopology make_topology(std::size_t num_qubits, std::span<const std::size_t> depth_split,
                              std::span<const std::size_t> residual_points);

inline NetworkTopology make_topology(std::size_t num_qubits,
                                     std::initializer_list<std::size_t> depth_split,
                                     std::initializer_list<std::size_t> residual_points) {
  return make_topology(num_qubits, std::span(depth_split.begin(), depth_split.size()),
                       std::span(residual_points.begin(), residual_points.size()));
}

/// Residual placements for a cascade of `num_nodes` nodes, excluding the
/// trailing position. For three nodes: {0,1}, {1}, {0}.
std::vector<std::vector<std::size_t>> enumerate_residual_configs(std::size_t num_nodes);

Statevector forward(const NetworkTopology &topology, std::span<const double> params,
                    Statevector input, const ResidualAdditionPolicy &policy = {});

/// States at the entry of every node of one forward pass, so that a
/// perturbation confined to node i can be re-evaluated from node i onward.
class ForwardTape {
public:
  ForwardTape(const NetworkTopology &topology, std::span<const double> params,
              const Statevector &input, const ResidualAdditionPolicy &policy = {});

  const Statevector &output() const noexcept { return output_; }

  /// Re-runs the network from the entry of `node` with parameters `params`.
  /// Only parameters of nodes >= `node` may differ from the recorded pass.
  Statevector resume(std::size_t node, std::span<const double> params) const;

private:
  const NetworkTopology *topology_;
  ResidualAdditionPolicy policy_;
  std::vector<Statevector> node_inputs_;
  std::vector<Statevector> segment_inputs_;
  Statevector output_;
};

nlohmann::json to_json(const NetworkTopology &topology);
NetworkTopology topology_from_json(const nlohmann::json &j);

} // namespace resqnet
