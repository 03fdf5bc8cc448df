#include "resqnet/analysis.hpp"

#include "resqnet/circuit.hpp"
#include "resqnet/error.hpp"
#include "resqnet/objective.hpp"
#include "resqnet/rng.hpp"

#include <omp.h>

#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <string>

namespace resqnet {

namespace {

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Parallel loop over [0, count) rethrowing the lowest-index failure.
template <typename Body> void parallel_indexed(std::size_t count, int workers, Body body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace

LandscapeGrid scan_landscape(const NetworkTopology &topology,
                             std::array<std::size_t, 2> axis_params, std::size_t resolution,
                             std::array<AngleRange, 2> ranges, std::vector<double> fixed_params,
                             int workers) {
  if (fixed_params.size() != topology.num_params()) {
    throw InvalidArgument("scan_landscape: expected " + std::to_string(topology.num_params()) +
                          " fixed parameters, got " + std::to_string(fixed_params.size()));
  }
  if (axis_params[0] == axis_params[1]) {
    throw InvalidArgument("scan_landscape: axis parameters must be distinct");
  }
  for (auto a : axis_params) {
    if (a >= topology.num_params()) {
      throw InvalidArgument("scan_landscape: axis parameter " + std::to_string(a) +
                            " out of range");
    }
  }
  if (resolution < 2) {
    throw InvalidArgument("scan_landscape: resolution must be at least 2");
  }

  LandscapeGrid grid;
  grid.axis_params = axis_params;
  grid.ranges = ranges;
  grid.resolution = resolution;
  grid.fixed_params = std::move(fixed_params);
  grid.values.assign(resolution * resolution, 0.0);

  parallel_indexed(resolution * resolution, workers, [&](std::size_t cell) {
    const std::size_t i = cell / resolution;
    const std::size_t j = cell % resolution;
    std::vector<double> p = grid.fixed_params;
    p[axis_params[0]] = ranges[0].at(i, resolution);
    p[axis_params[1]] = ranges[1].at(j, resolution);
    grid.values[cell] = cost(topology, p);
  });
  return grid;
}

FlatnessReport flatness(const LandscapeGrid &grid, double grad_threshold) {
  const std::size_t r = grid.resolution;
  if (r < 3 || grid.values.size() != r * r) {
    throw InvalidArgument("flatness: need a populated grid with resolution >= 3");
  }
  FlatnessReport rep{grad_threshold, 0.0, std::numeric_limits<double>::infinity(), {0, 0}};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (grid.at(i, j) < rep.min_value) {
        rep.min_value = grid.at(i, j);
        rep.min_location = {i, j};
      }
    }
  }
  std::size_t flat = 0;
  for (std::size_t i = 1; i + 1 < r; ++i) {
    for (std::size_t j = 1; j + 1 < r; ++j) {
      const double gi = 0.5 * (grid.at(i + 1, j) - grid.at(i - 1, j));
      const double gj = 0.5 * (grid.at(i, j + 1) - grid.at(i, j - 1));
      if (std::hypot(gi, gj) < grad_threshold) ++flat;
    }
  }
  rep.flat_fraction = static_cast<double>(flat) / static_cast<double>((r - 2) * (r - 2));
  return rep;
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) {
    throw InvalidArgument("sample_variance: need at least two values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

VarianceSweep variance_sweep(const TopologyFamily &family,
                             std::span<const std::size_t> qubit_counts, std::size_t param_index,
                             std::size_t samples, std::uint64_t seed,
                             const GradientOptions &options) {
  if (samples < kMinVarianceSamples) {
    throw InvalidArgument("variance_sweep: need at least " +
                          std::to_string(kMinVarianceSamples) + " samples, got " +
                          std::to_string(samples));
  }
  VarianceSweep sweep;
  sweep.qubit_counts.assign(qubit_counts.begin(), qubit_counts.end());
  sweep.samples = samples;
  sweep.param_index = param_index;

  GradientOptions inner = options;
  inner.workers = 1;
  for (auto nq : qubit_counts) {
    if (nq < 2) throw InvalidArgument("variance_sweep: qubit counts must be >= 2");
    const NetworkTopology topology = family(nq);
    if (param_index >= topology.num_params()) {
      throw InvalidArgument("variance_sweep: parameter index out of range");
    }
    Rng rng(derive_seed(seed, {"variance", std::to_string(nq)}));
    std::vector<std::vector<double>> draws;
    draws.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
      draws.push_back(random_parameters(topology.num_params(), rng));
    }
    std::vector<double> grads(samples);
    parallel_indexed(samples, options.workers, [&](std::size_t s) {
      grads[s] = partial_derivative(topology, draws[s], param_index, inner).value;
    });
    sweep.variances.push_back(sample_variance(grads));
  }
  return sweep;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_landscape_csv(std::ostream &os, const LandscapeGrid &grid) {
  os << "i,j,theta_i,theta_j,cost\n";
  const std::size_t r = grid.resolution;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      os << i << ',' << j << ',' << format_double(grid.ranges[0].at(i, r)) << ','
         << format_double(grid.ranges[1].at(j, r)) << ',' << format_double(grid.at(i, j)) << '\n';
    }
  }
}

void write_variance_csv(std::ostream &os, const VarianceSweep &sweep) {
  os << "num_qubits,variance,samples\n";
  for (std::size_t k = 0; k < sweep.qubit_counts.size(); ++k) {
    os << sweep.qubit_counts[k] << ',' << format_double(sweep.variances[k]) << ','
       << sweep.samples << '\n';
  }
}

} // namespace resqnet
