#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace resqnet {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Dense n-qubit state. Amplitude index bit (n-1-q) holds qubit q, so qubit 0
/// is the most significant bit.
class Statevector {
public:
  /// Takes ownership of `amplitudes`; the length must be 2^num_qubits.
  /// Normalization is not enforced (residual sums are transiently unnormalized).
  Statevector(std::size_t num_qubits, std::vector<Complex> amplitudes);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() noexcept { return amplitudes_; }

  const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

  double squared_norm() const noexcept;

private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

enum class GateKind { RX, RY, CNOT };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

struct GateOp {
  GateKind kind;
  std::size_t target;
  std::optional<std::size_t> control;
  std::optional<std::size_t> param_index;

  static GateOp rx(std::size_t target, std::size_t param_index) {
    return {GateKind::RX, target, std::nullopt, param_index};
  }
  static GateOp ry(std::size_t target, std::size_t param_index) {
    return {GateKind::RY, target, std::nullopt, param_index};
  }
  static GateOp cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, target, control, std::nullopt};
  }

  bool is_rotation() const noexcept { return kind != GateKind::CNOT; }

  friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Throws InvalidArgument unless the gate is well formed for `num_qubits`.
void validate_gate(const GateOp &gate, std::size_t num_qubits);

/// |0...0> on `num_qubits` qubits; rejects 0 and anything above `max_qubits`.
Statevector zero_state(std::size_t num_qubits, std::size_t max_qubits = kDefaultMaxQubits);

/// RX(t) = exp(-i t X / 2), RY(t) = exp(-i t Y / 2); CNOT flips target when control is 1.
/// `angle` must be present exactly for rotations.
Statevector apply_gate(Statevector state, const GateOp &gate, std::optional<double> angle);

/// In-place variant used by the circuit runner. No validation.
void apply_gate_unchecked(std::span<Complex> amps, std::size_t num_qubits, const GateOp &gate,
                          double angle);

/// |<0...0|psi>|^2
double probability_of_all_zeros(const Statevector &state);

} // namespace resqnet
