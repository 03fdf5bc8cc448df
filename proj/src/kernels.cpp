#include "resqnet/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

namespace resqnet::kernels {

namespace {

inline std::size_t bit_of(std::size_t num_qubits, std::size_t qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// Index of the k-th basis state whose `mask` bit is zero.
inline std::size_t insert_zero(std::size_t k, std::size_t mask) {
  return ((k & ~(mask - 1)) << 1) | (k & (mask - 1));
}

// Rotation matrix [[a, b], [c, d]] applied to every (i0, i1) pair.
struct Rotation {
  Complex a, b, c, d;
};

inline Rotation rx_matrix(double angle) {
  const double cs = std::cos(angle / 2);
  const double sn = std::sin(angle / 2);
  return {{cs, 0}, {0, -sn}, {0, -sn}, {cs, 0}};
}

inline Rotation ry_matrix(double angle) {
  const double cs = std::cos(angle / 2);
  const double sn = std::sin(angle / 2);
  return {{cs, 0}, {-sn, 0}, {sn, 0}, {cs, 0}};
}

inline void rotate_pair(std::span<Complex> amps, std::size_t k, std::size_t mask,
                        const Rotation &m) {
  const std::size_t i0 = insert_zero(k, mask);
  const std::size_t i1 = i0 | mask;
  const Complex v0 = amps[i0];
  const Complex v1 = amps[i1];
  amps[i0] = m.a * v0 + m.b * v1;
  amps[i1] = m.c * v0 + m.d * v1;
}

void rotate_serial(std::span<Complex> amps, std::size_t num_qubits, std::size_t target,
                   const Rotation &m) {
  const std::size_t mask = bit_of(num_qubits, target);
  const std::size_t half = amps.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    rotate_pair(amps, k, mask, m);
  }
}

void rotate_parallel(std::span<Complex> amps, std::size_t num_qubits, std::size_t target,
                     const Rotation &m) {
  const std::size_t mask = bit_of(num_qubits, target);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    rotate_pair(amps, static_cast<std::size_t>(k), mask, m);
  }
}

inline void cnot_pair(std::span<Complex> amps, std::size_t k, std::size_t cmask,
                      std::size_t tmask) {
  const std::size_t i0 = insert_zero(k, tmask);
  if (i0 & cmask) {
    std::swap(amps[i0], amps[i0 | tmask]);
  }
}

} // namespace

namespace serial {

void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  rotate_serial(amps, num_qubits, target, rx_matrix(angle));
}

void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  rotate_serial(amps, num_qubits, target, ry_matrix(angle));
}

void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target) {
  const std::size_t cmask = bit_of(num_qubits, control);
  const std::size_t tmask = bit_of(num_qubits, target);
  const std::size_t half = amps.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    cnot_pair(amps, k, cmask, tmask);
  }
}

} // namespace serial

namespace parallel {

void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  rotate_parallel(amps, num_qubits, target, rx_matrix(angle));
}

void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  rotate_parallel(amps, num_qubits, target, ry_matrix(angle));
}

void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target) {
  const std::size_t cmask = bit_of(num_qubits, control);
  const std::size_t tmask = bit_of(num_qubits, target);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    cnot_pair(amps, static_cast<std::size_t>(k), cmask, tmask);
  }
}

} // namespace parallel

void apply_rx(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  if (num_qubits >= kParallelQubitThreshold) {
    parallel::apply_rx(amps, num_qubits, target, angle);
  } else {
    serial::apply_rx(amps, num_qubits, target, angle);
  }
}

void apply_ry(std::span<Complex> amps, std::size_t num_qubits, std::size_t target, double angle) {
  if (num_qubits >= kParallelQubitThreshold) {
    parallel::apply_ry(amps, num_qubits, target, angle);
  } else {
    serial::apply_ry(amps, num_qubits, target, angle);
  }
}

void apply_cnot(std::span<Complex> amps, std::size_t num_qubits, std::size_t control,
                std::size_t target) {
  if (num_qubits >= kParallelQubitThreshold) {
    parallel::apply_cnot(amps, num_qubits, control, target);
  } else {
    serial::apply_cnot(amps, num_qubits, control, target);
  }
}

} // namespace resqnet::kernels
