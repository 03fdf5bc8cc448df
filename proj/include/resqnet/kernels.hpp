#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Gate kernels acting in place on a dense amplitude buffer of 2^num_qubits
// entries. Qubit 0 is the most significant bit of the basis index.
//
// `serial` is the reference implementation; `parallel` distributes the pair
// loop over OpenMP threads. Both produce bit-identical results because each
// output amplitude is written by exactly one iteration.

namespace resqnet::kernels {

using Complex = std::complex<double>;

namespace serial {
void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target);
} // namespace serial

namespace parallel {
void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target);
} // namespace parallel

/// States with at least this many qubits use the parallel kernels by default.
inline constexpr std::size_t kParallelQubitThreshold = 14;

void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle);
void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target);

} // namespace resqnet::kernels
