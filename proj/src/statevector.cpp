#include "resqnet/statevector.hpp"

#include "resqnet/error.hpp"
#include "resqnet/kernels.hpp"

#include <string>

namespace resqnet {

Statevector::Statevector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits == 0 || num_qubits >= 8 * sizeof(std::size_t)) {
    throw InvalidArgument("statevector: invalid qubit count " + std::to_string(num_qubits));
  }
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("statevector: expected " +
                          std::to_string(std::size_t{1} << num_qubits) + " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
}

double Statevector::squared_norm() const noexcept {
  double sum = 0.0;
  for (const auto &a : amplitudes_) {
    sum += std::norm(a);
  }
  return sum;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
  case GateKind::RX:
    return "RX";
  case GateKind::RY:
    return "RY";
  case GateKind::CNOT:
    return "CNOT";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  if (name == "RX") return GateKind::RX;
  if (name == "RY") return GateKind::RY;
  if (name == "CNOT") return GateKind::CNOT;
  throw InvalidArgument("unknown gate kind '" + std::string(name) + "'");
}

void validate_gate(const GateOp &gate, std::size_t num_qubits) {
  if (gate.target >= num_qubits) {
    throw InvalidArgument("gate target " + std::to_string(gate.target) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
  }
  if (gate.is_rotation()) {
    if (gate.control) {
      throw InvalidArgument("rotation gate must not have a control qubit");
    }
    if (!gate.param_index) {
      throw InvalidArgument("rotation gate requires a parameter index");
    }
  } else {
    if (!gate.control) {
      throw InvalidArgument("CNOT requires a control qubit");
    }
    if (*gate.control >= num_qubits) {
      throw InvalidArgument("CNOT control " + std::to_string(*gate.control) + " out of range");
    }
    if (*gate.control == gate.target) {
      throw InvalidArgument("CNOT control equals target");
    }
    if (gate.param_index) {
      throw InvalidArgument("CNOT must not carry a parameter index");
    }
  }
}

Statevector zero_state(std::size_t num_qubits, std::size_t max_qubits) {
  if (num_qubits < 1 || num_qubits > max_qubits) {
    throw InvalidArgument("zero_state: qubit count " + std::to_string(num_qubits) +
                          " outside [1, " + std::to_string(max_qubits) + "]");
  }
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[0] = 1.0;
  return Statevector(num_qubits, std::move(amps));
}

void apply_gate_unchecked(std::span<Complex> amps, std::size_t num_qubits, const GateOp &gate,
                          double angle) {
  switch (gate.kind) {
  case GateKind::RX:
    kernels::apply_rx(amps, num_qubits, gate.target, angle);
    break;
  case GateKind::RY:
    kernels::apply_ry(amps, num_qubits, gate.target, angle);
    break;
  case GateKind::CNOT:
    kernels::apply_cnot(amps, num_qubits, *gate.control, gate.target);
    break;
  }
}

Statevector apply_gate(Statevector state, const GateOp &gate, std::optional<double> angle) {
  validate_gate(gate, state.num_qubits());
  if (gate.is_rotation() != angle.has_value()) {
    throw InvalidArgument(gate.is_rotation() ? "rotation gate requires an angle"
                                             : "CNOT does not take an angle");
  }
  apply_gate_unchecked(state.mutable_amplitudes(), state.num_qubits(), gate, angle.value_or(0.0));
  return state;
}

double probability_of_all_zeros(const Statevector &state) { return std::norm(state[0]); }

} // namespace resqnet
