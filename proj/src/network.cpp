#include "resqnet/network.hpp"

#include "resqnet/error.hpp"

#include <algorithm>
#include <cmath>

namespace resqnet {

std::string_view to_string(NetworkKind kind) {
  switch (kind) {
  case NetworkKind::SimplePlain:
    return "simple-plain";
  case NetworkKind::Plain:
    return "plain";
  case NetworkKind::ResQNet:
    return "resqnet";
  }
  return "?";
}

NetworkKind NetworkTopology::kind() const noexcept {
  if (has_residual()) return NetworkKind::ResQNet;
  return nodes_.size() == 1 ? NetworkKind::SimplePlain : NetworkKind::Plain;
}

std::size_t NetworkTopology::node_of_param(std::size_t param) const {
  if (param >= num_params_) {
    throw InvalidArgument("parameter index " + std::to_string(param) + " out of range");
  }
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (param >= nodes_[i].param_offset) return i;
  }
  return 0;
}

std::string NetworkTopology::label() const {
  std::string out;
  switch (kind()) {
  case NetworkKind::SimplePlain:
    out = "simple_";
    break;
  case NetworkKind::Plain:
    out = "plain_";
    break;
  case NetworkKind::ResQNet:
    out = "res_";
    break;
  }
  for (std::size_t i = 0; i < depth_split_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(depth_split_[i]);
  }
  if (has_residual()) {
    out += "_r";
    for (std::size_t i = 0; i < residual_points_.size(); ++i) {
      if (i) out += '-';
      out += std::to_string(residual_points_[i]);
    }
  }
  return out;
}

NetworkTopology make_topology(std::size_t num_qubits, std::span<const std::size_t> depth_split,
                              std::span<const std::size_t> residual_points) {
  if (depth_split.empty()) {
    throw InvalidArgument("make_topology: empty depth split");
  }
  NetworkTopology t;
  t.num_qubits_ = num_qubits;
  t.depth_split_.assign(depth_split.begin(), depth_split.end());
  std::size_t offset = 0;
  for (auto depth : depth_split) {
    auto circuit = build_circuit(num_qubits, depth);
    const auto n = circuit.num_params();
    t.nodes_.push_back({std::move(circuit), offset});
    offset += n;
  }
  t.num_params_ = offset;
  t.residual_flags_.assign(depth_split.size(), false);
  for (auto r : residual_points) {
    if (r >= depth_split.size()) {
      throw InvalidArgument("make_topology: residual point " + std::to_string(r) +
                            " out of range for " + std::to_string(depth_split.size()) +
                            " nodes");
    }
    t.residual_flags_[r] = true;
  }
  for (std::size_t i = 0; i < depth_split.size(); ++i) {
    if (t.residual_flags_[i]) t.residual_points_.push_back(i);
  }
  return t;
}

std::vector<std::vector<std::size_t>> enumerate_residual_configs(std::size_t num_nodes) {
  std::vector<std::vector<std::size_t>> out;
  if (num_nodes < 2) return out;
  const std::size_t slots = num_nodes - 1;
  for (std::size_t mask = (std::size_t{1} << slots) - 1; mask > 0; --mask) {
    std::vector<std::size_t> cfg;
    for (std::size_t i = 0; i < slots; ++i) {
      if (mask & (std::size_t{1} << i)) cfg.push_back(i);
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

namespace {

void check_binding(const NetworkTopology &topology, std::span<const double> params,
                   const Statevector &input) {
  if (params.size() != topology.num_params()) {
    throw InvalidArgument("forward: expected " + std::to_string(topology.num_params()) +
                          " parameters, got " + std::to_string(params.size()));
  }
  if (input.num_qubits() != topology.num_qubits()) {
    throw InvalidArgument("forward: network has " + std::to_string(topology.num_qubits()) +
                          " qubits, input has " + std::to_string(input.num_qubits()));
  }
}

// segment_start <- normalize(segment_start + current); current <- segment_start.
void residual_add(Statevector &current, Statevector &segment_start, std::size_t node,
                  const ResidualAdditionPolicy &policy) {
  auto sum = segment_start.mutable_amplitudes();
  const auto out = current.amplitudes();
  double norm2 = 0.0;
  for (std::size_t k = 0; k < sum.size(); ++k) {
    sum[k] += out[k];
    norm2 += std::norm(sum[k]);
  }
  const double norm = std::sqrt(norm2);
  if (!(norm >= policy.tolerance)) {
    throw DegenerateSumError(node, norm);
  }
  const double scale = 1.0 / norm;
  for (auto &a : sum) {
    a *= scale;
  }
  current = segment_start;
}

void run_node(const QuantumNode &node, std::span<const double> params, Statevector &state) {
  run_gates(node.circuit.gates(),
            params.subspan(node.param_offset, node.circuit.num_params()),
            state.mutable_amplitudes(), state.num_qubits());
}

Statevector run_from(const NetworkTopology &topology, std::span<const double> params,
                     std::size_t first_node, Statevector current, Statevector segment_start,
                     const ResidualAdditionPolicy &policy) {
  const auto nodes = topology.nodes();
  for (std::size_t i = first_node; i < nodes.size(); ++i) {
    run_node(nodes[i], params, current);
    if (topology.residual_after(i)) {
      residual_add(current, segment_start, i, policy);
    }
  }
  return current;
}

} // namespace

Statevector forward(const NetworkTopology &topology, std::span<const double> params,
                    Statevector input, const ResidualAdditionPolicy &policy) {
  check_binding(topology, params, input);
  if (!topology.has_residual()) {
    for (const auto &node : topology.nodes()) {
      run_node(node, params, input);
    }
    return input;
  }
  Statevector segment_start = input;
  return run_from(topology, params, 0, std::move(input), std::move(segment_start), policy);
}

ForwardTape::ForwardTape(const NetworkTopology &topology, std::span<const double> params,
                         const Statevector &input, const ResidualAdditionPolicy &policy)
    : topology_(&topology), policy_(policy), output_(input) {
  check_binding(topology, params, input);
  const auto nodes = topology.nodes();
  node_inputs_.reserve(nodes.size());
  segment_inputs_.reserve(nodes.size());
  Statevector current = input;
  Statevector segment_start = input;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    node_inputs_.push_back(current);
    segment_inputs_.push_back(segment_start);
    run_node(nodes[i], params, current);
    if (topology.residual_after(i)) {
      residual_add(current, segment_start, i, policy_);
    }
  }
  output_ = std::move(current);
}

Statevector ForwardTape::resume(std::size_t node, std::span<const double> params) const {
  if (node >= node_inputs_.size()) {
    throw InvalidArgument("ForwardTape::resume: node index out of range");
  }
  if (params.size() != topology_->num_params()) {
    throw InvalidArgument("ForwardTape::resume: parameter length mismatch");
  }
  return run_from(*topology_, params, node, node_inputs_[node], segment_inputs_[node], policy_);
}

nlohmann::json to_json(const NetworkTopology &topology) {
  return {{"num_qubits", topology.num_qubits()},
          {"depth_split", topology.depth_split()},
          {"residual_points", topology.residual_points()}};
}

NetworkTopology topology_from_json(const nlohmann::json &j) {
  const auto nq = j.at("num_qubits").get<std::size_t>();
  const auto split = j.at("depth_split").get<std::vector<std::size_t>>();
  const auto res = j.value("residual_points", std::vector<std::size_t>{});
  return make_topology(nq, split, res);
}

} // namespace resqnet
