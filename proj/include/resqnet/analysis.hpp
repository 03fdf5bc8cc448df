#pragma once

#include "resqnet/gradients.hpp"
#include "resqnet/network.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace resqnet {

struct AngleRange {
  double lo;
  double hi;

  /// Coordinate of grid point `k` out of `resolution` (endpoints included).
  double at(std::size_t k, std::size_t resolution) const {
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(resolution - 1);
  }
};

/// Cost over a 2D slice of parameter space. values[i * resolution + j] is the
/// cost with axis parameter 0 at ranges[0].at(i) and axis parameter 1 at
/// ranges[1].at(j).
struct LandscapeGrid {
  std::array<std::size_t, 2> axis_params{};
  std::array<AngleRange, 2> ranges{};
  std::size_t resolution = 0;
  std::vector<double> fixed_params;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * resolution + j]; }
};

LandscapeGrid scan_landscape(const NetworkTopology &topology,
                             std::array<std::size_t, 2> axis_params, std::size_t resolution,
                             std::array<AngleRange, 2> ranges, std::vector<double> fixed_params,
                             int workers = 1);

struct FlatnessReport {
  double grad_threshold;
  /// Fraction of interior cells whose central-difference gradient magnitude
  /// (cost per grid step) is below the threshold.
  double flat_fraction;
  double min_value;
  std::array<std::size_t, 2> min_location;
};

FlatnessReport flatness(const LandscapeGrid &grid, double grad_threshold);

struct VarianceSweep {
  std::vector<std::size_t> qubit_counts;
  std::size_t samples = 0;
  std::size_t param_index = 0;
  std::vector<double> variances;
};

/// Unbiased (n - 1) sample variance; needs at least two values.
double sample_variance(std::span<const double> values);

inline constexpr std::size_t kMinVarianceSamples = 30;

using TopologyFamily = std::function<NetworkTopology(std::size_t num_qubits)>;

/// For each qubit count, draws `samples` parameter vectors uniform in [0, pi]
/// and records the sample variance of dC/d(param_index).
VarianceSweep variance_sweep(const TopologyFamily &family,
                             std::span<const std::size_t> qubit_counts, std::size_t param_index,
                             std::size_t samples, std::uint64_t seed,
                             const GradientOptions &options = {});

/// "i,j,theta_i,theta_j,cost" rows in row-major order.
void write_landscape_csv(std::ostream &os, const LandscapeGrid &grid);
/// "num_qubits,variance,samples" rows.
void write_variance_csv(std::ostream &os, const VarianceSweep &sweep);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

} // namespace resqnet
