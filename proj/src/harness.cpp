#include "resqnet/harness.hpp"

#include "resqnet/circuit.hpp"
#include "resqnet/error.hpp"
#include "resqnet/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace resqnet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// --- parsing -------------------------------------------------------------

void reject_unknown_keys(const json &j, const std::string &path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto &[key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
    }
  }
}

template <typename T> T read(const json &j, const std::string &field) {
  try {
    return j.get<T>();
  } catch (const json::exception &e) {
    throw ConfigError(field, std::string("wrong type (") + e.what() + ")");
  }
}

const json &require_object(const json &j, const std::string &field) {
  if (!j.is_object()) throw ConfigError(field, "expected an object");
  return j;
}

// Values built in code arrive as signed integers, parsed text as unsigned.
bool is_non_negative_integer(const json &v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

std::vector<std::size_t> read_index_list(const json &j, const std::string &field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of non-negative integers");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto &v = j[k];
    if (!is_non_negative_integer(v)) {
      throw ConfigError(field + "[" + std::to_string(k) + "]", "expected a non-negative integer");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::vector<std::size_t> read_depth_split(const json &j, const std::string &field) {
  auto split = read_index_list(j, field);
  if (split.empty()) throw ConfigError(field, "depth split must not be empty");
  for (std::size_t k = 0; k < split.size(); ++k) {
    if (split[k] < 1) {
      throw ConfigError(field + "[" + std::to_string(k) + "]", "layer depth must be at least 1");
    }
  }
  return split;
}

std::vector<CellSpec> parse_cells(const json &j) {
  std::vector<CellSpec> cells;
  const bool has_cells = j.contains("cells");
  const bool has_splits = j.contains("depth_split") || j.contains("depth_splits");
  if (has_cells && has_splits) {
    throw ConfigError("cells", "give either 'cells' or depth splits, not both");
  }
  if (has_cells) {
    const auto &arr = j.at("cells");
    if (!arr.is_array() || arr.empty()) throw ConfigError("cells", "expected a non-empty array");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string path = "cells[" + std::to_string(k) + "]";
      require_object(arr[k], path);
      reject_unknown_keys(arr[k], path, {"depth_split", "residual_points"});
      if (!arr[k].contains("depth_split")) throw ConfigError(path + ".depth_split", "missing");
      CellSpec cell;
      cell.depth_split = read_depth_split(arr[k].at("depth_split"), path + ".depth_split");
      if (arr[k].contains("residual_points")) {
        cell.residual_points =
            read_index_list(arr[k].at("residual_points"), path + ".residual_points");
      }
      cells.push_back(std::move(cell));
    }
    return cells;
  }
  if (!has_splits) throw ConfigError("depth_splits", "missing (or give 'cells')");
  if (j.contains("depth_split") && j.contains("depth_splits")) {
    throw ConfigError("depth_split", "give either depth_split or depth_splits");
  }
  if (j.contains("residual_points") && j.contains("residual_configs")) {
    throw ConfigError("residual_points", "give either residual_points or residual_configs");
  }

  std::vector<std::vector<std::size_t>> splits;
  if (j.contains("depth_split")) {
    splits.push_back(read_depth_split(j.at("depth_split"), "depth_split"));
  } else {
    const auto &arr = j.at("depth_splits");
    if (!arr.is_array() || arr.empty()) {
      throw ConfigError("depth_splits", "expected a non-empty array of splits");
    }
    for (std::size_t k = 0; k < arr.size(); ++k) {
      splits.push_back(read_depth_split(arr[k], "depth_splits[" + std::to_string(k) + "]"));
    }
  }
  std::vector<std::vector<std::size_t>> residuals{{}};
  if (j.contains("residual_points")) {
    residuals = {read_index_list(j.at("residual_points"), "residual_points")};
  } else if (j.contains("residual_configs")) {
    const auto &arr = j.at("residual_configs");
    if (!arr.is_array() || arr.empty()) {
      throw ConfigError("residual_configs", "expected a non-empty array");
    }
    residuals.clear();
    for (std::size_t k = 0; k < arr.size(); ++k) {
      residuals.push_back(read_index_list(arr[k], "residual_configs[" + std::to_string(k) + "]"));
    }
  }
  for (const auto &split : splits) {
    for (const auto &res : residuals) {
      cells.push_back({split, res});
    }
  }
  return cells;
}

OptimizerSettings parse_optimizer(const json &j) {
  require_object(j, "optimizer");
  reject_unknown_keys(j, "optimizer", {"alpha", "beta1", "beta2", "epsilon", "steps"});
  OptimizerSettings s;
  if (j.contains("alpha")) s.adam.alpha = read<double>(j.at("alpha"), "optimizer.alpha");
  if (j.contains("beta1")) s.adam.beta1 = read<double>(j.at("beta1"), "optimizer.beta1");
  if (j.contains("beta2")) s.adam.beta2 = read<double>(j.at("beta2"), "optimizer.beta2");
  if (j.contains("epsilon")) s.adam.epsilon = read<double>(j.at("epsilon"), "optimizer.epsilon");
  if (j.contains("steps")) {
    const auto &v = j.at("steps");
    if (!v.is_number_integer() || v.get<long long>() < 1) {
      throw ConfigError("optimizer.steps", "must be an integer >= 1");
    }
    s.steps = v.get<std::size_t>();
  }
  if (!(s.adam.alpha > 0.0)) throw ConfigError("optimizer.alpha", "must be positive");
  if (!(s.adam.beta1 >= 0.0 && s.adam.beta1 < 1.0)) {
    throw ConfigError("optimizer.beta1", "must lie in [0, 1)");
  }
  if (!(s.adam.beta2 >= 0.0 && s.adam.beta2 < 1.0)) {
    throw ConfigError("optimizer.beta2", "must lie in [0, 1)");
  }
  if (!(s.adam.epsilon > 0.0)) throw ConfigError("optimizer.epsilon", "must be positive");
  return s;
}

LandscapeSettings parse_landscape(const json &j) {
  require_object(j, "landscape");
  reject_unknown_keys(j, "landscape", {"axis_params", "range", "resolution", "grad_threshold"});
  LandscapeSettings s;
  if (j.contains("axis_params")) {
    const auto axes = read_index_list(j.at("axis_params"), "landscape.axis_params");
    if (axes.size() != 2) throw ConfigError("landscape.axis_params", "expected two indices");
    if (axes[0] == axes[1]) throw ConfigError("landscape.axis_params", "indices must differ");
    s.axis_params = {axes[0], axes[1]};
  }
  if (j.contains("range")) {
    const auto r = read<std::vector<double>>(j.at("range"), "landscape.range");
    if (r.size() != 2 || !(r[1] > r[0])) {
      throw ConfigError("landscape.range", "expected [lo, hi] with hi > lo");
    }
    s.range = {r[0], r[1]};
  }
  if (j.contains("resolution")) {
    const auto &v = j.at("resolution");
    if (!v.is_number_integer() || v.get<long long>() < 2) {
      throw ConfigError("landscape.resolution", "must be an integer >= 2");
    }
    s.resolution = v.get<std::size_t>();
  }
  if (j.contains("grad_threshold")) {
    s.grad_threshold = read<double>(j.at("grad_threshold"), "landscape.grad_threshold");
    if (!(s.grad_threshold > 0.0)) throw ConfigError("landscape.grad_threshold", "must be positive");
  }
  return s;
}

VarianceSettings parse_variance(const json &j) {
  require_object(j, "variance");
  reject_unknown_keys(j, "variance", {"qubit_counts", "samples", "param_index"});
  VarianceSettings s;
  if (!j.contains("qubit_counts")) throw ConfigError("variance.qubit_counts", "missing");
  s.qubit_counts = read_index_list(j.at("qubit_counts"), "variance.qubit_counts");
  if (s.qubit_counts.empty()) throw ConfigError("variance.qubit_counts", "must not be empty");
  for (auto q : s.qubit_counts) {
    if (q < 2) throw ConfigError("variance.qubit_counts", "qubit counts must be >= 2");
  }
  if (j.contains("samples")) {
    const auto &v = j.at("samples");
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(kMinVarianceSamples)) {
      throw ConfigError("variance.samples",
                        "must be an integer >= " + std::to_string(kMinVarianceSamples));
    }
    s.samples = v.get<std::size_t>();
  }
  if (j.contains("param_index")) {
    const auto &v = j.at("param_index");
    if (!is_non_negative_integer(v)) throw ConfigError("variance.param_index", "expected an index");
    s.param_index = v.get<std::size_t>();
  }
  return s;
}

std::string split_label(const std::vector<std::size_t> &split) {
  std::string out;
  for (std::size_t i = 0; i < split.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(split[i]);
  }
  return out;
}

// --- output --------------------------------------------------------------

void prepare_out_dir(const fs::path &dir, bool force) {
  if (dir.empty()) throw ConfigError("outputs", "no output directory given");
  std::error_code ec;
  if (fs::exists(dir, ec)) {
    if (!fs::is_directory(dir, ec)) throw ConfigError("outputs", dir.string() + " is not a directory");
    if (!fs::is_empty(dir, ec) && !force) {
      throw ConfigError("outputs", dir.string() + " already exists and is not empty (use --force)");
    }
  }
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("outputs", "cannot create " + dir.string() + ": " + ec.message());
}

std::ofstream open_out(const fs::path &path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  return os;
}

class Manifest {
public:
  Manifest(const ExperimentConfig &config, Command command)
      : doc_{{"artifact_version", RESQNET_VERSION},
             {"command", std::string(to_string(command))},
             {"config_hash", config_hash(config)},
             {"config", to_json(config)},
             {"seeds", config.seeds},
             {"files", json::array()},
             {"status", "running"}} {}

  void add(const fs::path &file, std::uint64_t seed, const std::string &cell,
           std::optional<double> seconds = std::nullopt) {
    json entry{{"file", file.filename().string()},
               {"seed", seed},
               {"cell", cell},
               {"config_hash", doc_["config_hash"]}};
    if (seconds) entry["wall_seconds"] = *seconds;
    doc_["files"].push_back(std::move(entry));
  }

  void finish(const fs::path &dir, const std::optional<std::string> &failure) {
    doc_["status"] = failure ? "failed: " + *failure : std::string("ok");
    auto os = open_out(dir / "manifest.json");
    os << doc_.dump(2) << '\n';
  }

private:
  json doc_;
};

void log_line(const RunOptions &options, const std::string &line) {
  if (options.log) *options.log << line << '\n' << std::flush;
}

std::size_t max_qubits_for(bool allow_large) {
  return allow_large ? kDefaultMaxQubits : kDeskQubitCap;
}

void check_qubits(std::size_t nq, bool allow_large, const std::string &field) {
  if (nq < 2) throw ConfigError(field, "need at least 2 qubits");
  if (nq > max_qubits_for(allow_large)) {
    throw ConfigError(field, std::to_string(nq) + " qubits exceeds the " +
                                 std::to_string(max_qubits_for(allow_large)) +
                                 "-qubit limit" +
                                 (allow_large ? "" : " (pass --allow-large to opt in)"));
  }
}

std::vector<NetworkTopology> checked_topologies(const ExperimentConfig &config, std::size_t nq) {
  std::vector<NetworkTopology> out;
  for (std::size_t k = 0; k < config.cells.size(); ++k) {
    try {
      out.push_back(build_topology(nq, config.cells[k]));
    } catch (const InvalidArgument &e) {
      throw ConfigError("cells[" + std::to_string(k) + "]", e.what());
    }
  }
  return out;
}

template <typename Fn>
RunResult guarded(const ExperimentConfig &config, Command command, const RunOptions &options,
                  Fn body) {
  validate_for(config, command, options.allow_large);
  const fs::path dir = options.out_dir.empty() ? fs::path(config.outputs) : options.out_dir;
  prepare_out_dir(dir, options.force);
  if (config.num_qubits && *config.num_qubits > kDeskQubitCap) {
    log_line(options, "warning: " + std::to_string(*config.num_qubits) +
                          " qubits; statevector memory and runtime grow as 2^n");
  }
  Manifest manifest(config, command);
  RunResult result;
  try {
    body(dir, manifest, result);
  } catch (const std::exception &e) {
    result.failure = e.what();
  }
  manifest.finish(dir, result.failure);
  result.files.push_back(dir / "manifest.json");
  if (result.failure) log_line(options, "error: " + *result.failure);
  return result;
}

} // namespace

// --- public --------------------------------------------------------------

ExperimentConfig parse_config(const json &j) {
  require_object(j, "<root>");
  reject_unknown_keys(j, "",
                      {"name", "description", "num_qubits", "depth_split", "depth_splits",
                       "residual_points", "residual_configs", "cells", "optimizer", "fd_step",
                       "seeds", "outputs", "landscape", "variance"});
  ExperimentConfig c;
  if (!j.contains("name")) throw ConfigError("name", "missing");
  c.name = read<std::string>(j.at("name"), "name");
  if (c.name.empty()) throw ConfigError("name", "must not be empty");
  if (j.contains("description")) c.description = read<std::string>(j.at("description"), "description");
  if (j.contains("num_qubits")) {
    const auto &v = j.at("num_qubits");
    if (!is_non_negative_integer(v)) throw ConfigError("num_qubits", "expected a positive integer");
    c.num_qubits = v.get<std::size_t>();
  }
  c.cells = parse_cells(j);
  if (j.contains("optimizer")) c.optimizer = parse_optimizer(j.at("optimizer"));
  if (j.contains("fd_step")) {
    c.fd_step = read<double>(j.at("fd_step"), "fd_step");
    if (!(c.fd_step > 0.0 && c.fd_step <= 1e-2)) throw ConfigError("fd_step", "must lie in (0, 1e-2]");
  }
  if (j.contains("seeds")) {
    const auto &s = j.at("seeds");
    if (!s.is_array() || s.empty()) throw ConfigError("seeds", "expected a non-empty array");
    c.seeds.clear();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!is_non_negative_integer(s[k])) {
        throw ConfigError("seeds[" + std::to_string(k) + "]", "expected a non-negative integer");
      }
      c.seeds.push_back(s[k].get<std::uint64_t>());
    }
  }
  if (j.contains("outputs")) c.outputs = read<std::string>(j.at("outputs"), "outputs");
  if (j.contains("landscape")) c.landscape = parse_landscape(j.at("landscape"));
  if (j.contains("variance")) c.variance = parse_variance(j.at("variance"));
  return c;
}

ExperimentConfig load_config(const fs::path &path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config", "cannot read " + path.string());
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error &e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

json to_json(const ExperimentConfig &c) {
  json cells = json::array();
  for (const auto &cell : c.cells) {
    cells.push_back({{"depth_split", cell.depth_split}, {"residual_points", cell.residual_points}});
  }
  json j{{"name", c.name},
         {"cells", std::move(cells)},
         {"optimizer",
          {{"alpha", c.optimizer.adam.alpha},
           {"beta1", c.optimizer.adam.beta1},
           {"beta2", c.optimizer.adam.beta2},
           {"epsilon", c.optimizer.adam.epsilon},
           {"steps", c.optimizer.steps}}},
         {"fd_step", c.fd_step},
         {"seeds", c.seeds},
         {"outputs", c.outputs}};
  if (!c.description.empty()) j["description"] = c.description;
  if (c.num_qubits) j["num_qubits"] = *c.num_qubits;
  if (c.landscape) {
    const auto &l = *c.landscape;
    j["landscape"] = {{"axis_params", {l.axis_params[0], l.axis_params[1]}},
                      {"range", {l.range.lo, l.range.hi}},
                      {"resolution", l.resolution},
                      {"grad_threshold", l.grad_threshold}};
  }
  if (c.variance) {
    j["variance"] = {{"qubit_counts", c.variance->qubit_counts},
                     {"samples", c.variance->samples},
                     {"param_index", c.variance->param_index}};
  }
  return j;
}

std::string config_hash(const ExperimentConfig &config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(to_json(config).dump())));
  return buf;
}

std::string_view to_string(Command command) {
  switch (command) {
  case Command::Train:
    return "train";
  case Command::Landscape:
    return "landscape";
  case Command::Variance:
    return "variance";
  }
  return "?";
}

void validate_for(const ExperimentConfig &config, Command command, bool allow_large) {
  if (command == Command::Variance) {
    if (!config.variance) throw ConfigError("variance", "missing section for the variance command");
    for (auto nq : config.variance->qubit_counts) {
      check_qubits(nq, allow_large, "variance.qubit_counts");
      for (const auto &t : checked_topologies(config, nq)) {
        if (config.variance->param_index >= t.num_params()) {
          throw ConfigError("variance.param_index",
                            "out of range for " + t.label() + " at " + std::to_string(nq) +
                                " qubits");
        }
      }
    }
    return;
  }
  if (!config.num_qubits) throw ConfigError("num_qubits", "missing");
  check_qubits(*config.num_qubits, allow_large, "num_qubits");
  const auto topologies = checked_topologies(config, *config.num_qubits);
  if (command == Command::Landscape) {
    if (!config.landscape) throw ConfigError("landscape", "missing section for the landscape command");
    for (const auto &t : topologies) {
      for (auto a : config.landscape->axis_params) {
        if (a >= t.num_params()) {
          throw ConfigError("landscape.axis_params",
                            "index " + std::to_string(a) + " out of range for " + t.label());
        }
      }
    }
  }
}

std::uint64_t stream_seed(const ExperimentConfig &config, std::uint64_t seed,
                          const CellSpec &cell, std::string_view purpose) {
  const std::string split = split_label(cell.depth_split);
  return derive_seed(seed, {config.name, split, purpose});
}

NetworkTopology build_topology(std::size_t num_qubits, const CellSpec &cell) {
  return make_topology(num_qubits, cell.depth_split, cell.residual_points);
}

void write_trace_csv(std::ostream &os, const TrainingTrace &trace) {
  os << "iteration,cost,grad_norm\n";
  for (std::size_t i = 0; i < trace.costs.size(); ++i) {
    os << i << ',' << format_double(trace.costs[i]) << ',' << format_double(trace.grad_norms[i])
       << '\n';
  }
}

void write_fallback_csv(std::ostream &os, const TrainingTrace &trace) {
  os << "iteration,param_index,shift_value,fd_value\n";
  for (const auto &f : trace.fallbacks) {
    os << f.iteration << ',' << f.event.param_index << ',' << format_double(f.event.shift_value)
       << ',' << format_double(f.event.fd_value) << '\n';
  }
}

RunResult run_train(const ExperimentConfig &config, const RunOptions &options) {
  return guarded(config, Command::Train, options,
                 [&](const fs::path &dir, Manifest &manifest, RunResult &result) {
    const std::size_t nq = *config.num_qubits;
    GradientOptions grad_opts;
    grad_opts.fd_step = config.fd_step;
    grad_opts.workers = options.workers;
    for (const auto &cell : config.cells) {
      const NetworkTopology topology = build_topology(nq, cell);
      for (auto seed : config.seeds) {
        Rng rng(stream_seed(config, seed, cell, "init"));
        auto init = random_parameters(topology.num_params(), rng);
        const auto start = std::chrono::steady_clock::now();
        const auto trace =
            train(topology, std::move(init), config.optimizer.steps, config.optimizer.adam,
                  grad_opts);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const std::string stem = topology.label() + "_seed" + std::to_string(seed);
        const fs::path trace_path = dir / (stem + ".csv");
        {
          auto os = open_out(trace_path);
          write_trace_csv(os, trace);
        }
        manifest.add(trace_path, seed, topology.label(), secs);
        result.files.push_back(trace_path);
        if (topology.has_residual()) {
          const fs::path fb_path = dir / (stem + "_fallbacks.csv");
          auto os = open_out(fb_path);
          write_fallback_csv(os, trace);
          manifest.add(fb_path, seed, topology.label());
          result.files.push_back(fb_path);
        }
        log_line(options, stem + ": cost " + format_double(trace.costs.front()) + " -> " +
                              format_double(trace.costs.back()) + " (" +
                              std::to_string(trace.fallbacks.size()) + " fallbacks)");
        if (trace.abort_reason) {
          throw Error(stem + ": " + *trace.abort_reason);
        }
      }
    }
  });
}

RunResult run_landscape(const ExperimentConfig &config, const RunOptions &options) {
  return guarded(config, Command::Landscape, options,
                 [&](const fs::path &dir, Manifest &manifest, RunResult &result) {
    const std::size_t nq = *config.num_qubits;
    const auto &ls = *config.landscape;
    std::ostringstream summary;
    summary << "cell,seed,flat_fraction,min_cost,min_i,min_j,grad_threshold\n";
    for (const auto &cell : config.cells) {
      const NetworkTopology topology = build_topology(nq, cell);
      for (auto seed : config.seeds) {
        Rng rng(stream_seed(config, seed, cell, "landscape-fixed"));
        auto fixed = random_parameters(topology.num_params(), rng);
        const auto grid = scan_landscape(topology, ls.axis_params, ls.resolution,
                                         {ls.range, ls.range}, std::move(fixed), options.workers);
        const std::string stem = topology.label() + "_seed" + std::to_string(seed);
        const fs::path path = dir / (stem + "_landscape.csv");
        {
          auto os = open_out(path);
          write_landscape_csv(os, grid);
        }
        manifest.add(path, seed, topology.label());
        result.files.push_back(path);
        if (ls.resolution >= 3) {
          const auto rep = flatness(grid, ls.grad_threshold);
          summary << topology.label() << ',' << seed << ',' << format_double(rep.flat_fraction)
                  << ',' << format_double(rep.min_value) << ',' << rep.min_location[0] << ','
                  << rep.min_location[1] << ',' << format_double(ls.grad_threshold) << '\n';
          log_line(options, stem + ": flat_fraction " + format_double(rep.flat_fraction) +
                                " min_cost " + format_double(rep.min_value));
        } else {
          log_line(options, stem + ": flatness n/a (resolution < 3)");
        }
      }
    }
    const fs::path summary_path = dir / "flatness_summary.csv";
    auto os = open_out(summary_path);
    os << summary.str();
    result.files.push_back(summary_path);
  });
}

RunResult run_variance(const ExperimentConfig &config, const RunOptions &options) {
  return guarded(config, Command::Variance, options,
                 [&](const fs::path &dir, Manifest &manifest, RunResult &result) {
    const auto &vs = *config.variance;
    GradientOptions grad_opts;
    grad_opts.fd_step = config.fd_step;
    grad_opts.workers = options.workers;
    for (const auto &cell : config.cells) {
      const std::string label = build_topology(vs.qubit_counts.front(), cell).label();
      const TopologyFamily family = [&cell](std::size_t nq) { return build_topology(nq, cell); };
      for (auto seed : config.seeds) {
        const auto sweep =
            variance_sweep(family, vs.qubit_counts, vs.param_index, vs.samples,
                           derive_seed(seed, {config.name, "variance"}), grad_opts);
        const std::string stem = label + "_seed" + std::to_string(seed);
        const fs::path path = dir / (stem + "_variance.csv");
        {
          auto os = open_out(path);
          write_variance_csv(os, sweep);
        }
        manifest.add(path, seed, label);
        result.files.push_back(path);
        log_line(options, stem + ": variance " + format_double(sweep.variances.front()) + " -> " +
                              format_double(sweep.variances.back()));
      }
    }
  });
}

const Preset *find_preset(std::string_view name) {
  for (const auto &p : builtin_presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

} // namespace resqnet
