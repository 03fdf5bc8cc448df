#include "resqnet/objective.hpp"

#include <algorithm>

namespace resqnet {

double cost_of_state(const Statevector &state) {
  return std::clamp(1.0 - probability_of_all_zeros(state), 0.0, 1.0);
}

double cost(const NetworkTopology &topology, std::span<const double> params) {
  return cost_of_state(forward(topology, params, zero_state(topology.num_qubits())));
}

} // namespace resqnet
