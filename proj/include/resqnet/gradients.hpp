#pragma once

#include "resqnet/network.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace resqnet {

inline constexpr double kDefaultFdStep = 1e-5;

enum class ShiftCheck {
  Auto,   ///< cross-check against finite differences on residual topologies only
  Always, ///< cross-check every parameter
  Never,  ///< trust the shift rule
};

struct GradientOptions {
  double fd_step = kDefaultFdStep;
  /// OpenMP threads for the shifted evaluations; 0 uses the runtime default.
  int workers = 1;
  ShiftCheck check = ShiftCheck::Auto;
};

/// Recorded whenever the shift rule disagreed with finite differences and the
/// finite-difference value was used instead.
struct FallbackEvent {
  std::size_t param_index;
  double shift_value;
  double fd_value;
};

struct GradientResult {
  std::vector<double> values;
  std::vector<FallbackEvent> fallbacks;
};

struct PartialDerivative {
  double value;
  std::optional<FallbackEvent> fallback;
};

/// |shift - fd| <= max(1e-6, 1e-4 |fd|)
bool shift_agrees(double shift_value, double fd_value);

/// Two-point (+-pi/2) parameter-shift gradient. On residual topologies (or
/// with ShiftCheck::Always) each component is checked against central
/// differences and replaced by the finite-difference value when they disagree.
GradientResult gradient_parameter_shift(const NetworkTopology &topology,
                                        std::span<const double> params,
                                        const GradientOptions &options = {});

/// Central differences (C(t + h e_i) - C(t - h e_i)) / 2h, with h in (0, 1e-2].
std::vector<double> gradient_finite_difference(const NetworkTopology &topology,
                                               std::span<const double> params,
                                               double step = kDefaultFdStep, int workers = 1);

/// Single component of gradient_parameter_shift, same fallback rule.
PartialDerivative partial_derivative(const NetworkTopology &topology,
                                     std::span<const double> params, std::size_t param_index,
                                     const GradientOptions &options = {});

} // namespace resqnet
