// Command-line front end: train / landscape / variance / presets.

#include "resqnet/error.hpp"
#include "resqnet/harness.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct CommonArgs {
  std::string config;
  std::string out;
  std::vector<std::uint64_t> seeds;
  int workers = 1;
  bool force = false;
  bool allow_large = false;
};

void add_common(CLI::App *cmd, CommonArgs &args) {
  cmd->add_option("--config", args.config, "Config file path or built-in preset name")->required();
  cmd->add_option("--out", args.out, "Output directory (overrides the config)");
  cmd->add_option("--seed", args.seeds, "Seeds (override the config)");
  cmd->add_option("--workers", args.workers, "OpenMP worker threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--force", args.force, "Write into an existing non-empty output directory");
  cmd->add_flag("--allow-large", args.allow_large, "Allow more than 12 qubits");
}

resqnet::ExperimentConfig resolve_config(const CommonArgs &args) {
  resqnet::ExperimentConfig config;
  if (std::filesystem::exists(args.config)) {
    config = resqnet::load_config(args.config);
  } else if (const auto *preset = resqnet::find_preset(args.config)) {
    config = resqnet::parse_config(nlohmann::json::parse(preset->json));
  } else {
    throw resqnet::ConfigError("config", "'" + args.config + "' is neither a file nor a preset");
  }
  if (!args.seeds.empty()) config.seeds = args.seeds;
  if (!args.out.empty()) config.outputs = args.out;
  return config;
}

int run(resqnet::Command command, const CommonArgs &args) {
  const auto config = resolve_config(args);
  resqnet::RunOptions options;
  options.out_dir = config.outputs;
  options.workers = args.workers;
  options.force = args.force;
  options.allow_large = args.allow_large;
  options.log = &std::cout;

  resqnet::RunResult result;
  switch (command) {
  case resqnet::Command::Train:
    result = resqnet::run_train(config, options);
    break;
  case resqnet::Command::Landscape:
    result = resqnet::run_landscape(config, options);
    break;
  case resqnet::Command::Variance:
    result = resqnet::run_variance(config, options);
    break;
  }
  std::cout << "config " << resqnet::config_hash(config) << ": wrote " << result.files.size()
            << " files to " << options.out_dir.string() << '\n';
  return result.failure ? kExitRuntime : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Residual quantum neural network simulator and experiment harness"};
  app.require_subcommand(1);

  CommonArgs train_args, landscape_args, variance_args;
  auto *train = app.add_subcommand("train", "Train every (cell, seed) of an experiment");
  add_common(train, train_args);
  auto *landscape = app.add_subcommand("landscape", "Scan 2D cost landscapes");
  add_common(landscape, landscape_args);
  auto *variance = app.add_subcommand("variance", "Gradient-variance sweep over qubit counts");
  add_common(variance, variance_args);

  auto *presets = app.add_subcommand("presets", "Inspect built-in experiment presets");
  presets->require_subcommand(1);
  auto *list = presets->add_subcommand("list", "List preset names");
  std::string show_name;
  auto *show = presets->add_subcommand("show", "Print a preset's JSON");
  show->add_option("name", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto &p : resqnet::builtin_presets()) {
        const auto j = nlohmann::json::parse(p.json);
        std::cout << p.name << "\t" << j.value("description", "") << '\n';
      }
      return kExitOk;
    }
    if (*show) {
      const auto *p = resqnet::find_preset(show_name);
      if (!p) {
        std::cerr << "unknown preset '" << show_name << "'\n";
        return kExitConfig;
      }
      std::cout << p->json;
      return kExitOk;
    }
    if (*train) return run(resqnet::Command::Train, train_args);
    if (*landscape) return run(resqnet::Command::Landscape, landscape_args);
    if (*variance) return run(resqnet::Command::Variance, variance_args);
  } catch (const resqnet::ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
