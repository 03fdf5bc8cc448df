#pragma once

#include "resqnet/network.hpp"

#include <span>

namespace resqnet {

/// 1 - |<0...0|psi>|^2, clamped to [0, 1] against round-off.
double cost_of_state(const Statevector &state);

/// Global cost of the network output for input |0...0>.
double cost(const NetworkTopology &topology, std::span<const double> params);

} // namespace resqnet
