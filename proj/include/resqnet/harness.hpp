#pragma once

#include "resqnet/analysis.hpp"
#include "resqnet/optimizer.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace resqnet {

inline constexpr std::size_t kDeskQubitCap = 12;

/// One network of an experiment matrix.
struct CellSpec {
  std::vector<std::size_t> depth_split;
  std::vector<std::size_t> residual_points;
};

struct OptimizerSettings {
  AdamConfig adam;
  std::size_t steps = 100;
};

struct LandscapeSettings {
  std::array<std::size_t, 2> axis_params{0, 1};
  AngleRange range{0.0, 6.283185307179586};
  std::size_t resolution = 50;
  double grad_threshold = 1e-3;
};

struct VarianceSettings {
  std::vector<std::size_t> qubit_counts;
  std::size_t samples = 30;
  std::size_t param_index = 0;
};

/// Parsed experiment definition. Cells come either from an explicit "cells"
/// list or from the product depth_splits x residual_configs.
struct ExperimentConfig {
  std::string name;
  std::string description;
  std::optional<std::size_t> num_qubits;
  std::vector<CellSpec> cells;
  OptimizerSettings optimizer;
  double fd_step = kDefaultFdStep;
  std::vector<std::uint64_t> seeds{1};
  std::string outputs;
  std::optional<LandscapeSettings> landscape;
  std::optional<VarianceSettings> variance;
};

/// Throws ConfigError naming the offending field.
ExperimentConfig parse_config(const nlohmann::json &j);
ExperimentConfig load_config(const std::filesystem::path &path);
nlohmann::json to_json(const ExperimentConfig &config);

/// 16 hex digits identifying the canonical form of the configuration.
std::string config_hash(const ExperimentConfig &config);

enum class Command { Train, Landscape, Variance };

std::string_view to_string(Command command);

/// Checks the fields `command` needs and the network/optimizer preconditions.
void validate_for(const ExperimentConfig &config, Command command, bool allow_large);

struct RunOptions {
  std::filesystem::path out_dir;
  int workers = 1;
  bool force = false;
  bool allow_large = false;
  std::ostream *log = nullptr;
};

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::optional<std::string> failure;
};

/// Seeds: one stream per (experiment, seed, cell, purpose).
std::uint64_t stream_seed(const ExperimentConfig &config, std::uint64_t seed,
                          const CellSpec &cell, std::string_view purpose);

NetworkTopology build_topology(std::size_t num_qubits, const CellSpec &cell);

/// Writes `iteration,cost,grad_norm` rows.
void write_trace_csv(std::ostream &os, const TrainingTrace &trace);
void write_fallback_csv(std::ostream &os, const TrainingTrace &trace);

/// The three commands validate, prepare `out_dir` (refusing to reuse a
/// non-empty directory unless forced), write their CSVs and a manifest.json.
RunResult run_train(const ExperimentConfig &config, const RunOptions &options);
RunResult run_landscape(const ExperimentConfig &config, const RunOptions &options);
RunResult run_variance(const ExperimentConfig &config, const RunOptions &options);

struct Preset {
  std::string name;
  std::string json;
};

const std::vector<Preset> &builtin_presets();
const Preset *find_preset(std::string_view name);

} // namespace resqnet
