// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails. The 15/20-qubit check runs only with --large or
// --large-only.

#include "oracle.hpp"

#include "resqnet/analysis.hpp"
#include "resqnet/circuit.hpp"
#include "resqnet/gradients.hpp"
#include "resqnet/harness.hpp"
#include "resqnet/network.hpp"
#include "resqnet/rng.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace resqnet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int g_workers = 1;
fs::path g_root;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::string slurp(const fs::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path &p) {
  std::ifstream is(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    rows.push_back(std::move(row));
  }
  return rows;
}

ExperimentConfig load_preset(std::string_view name) {
  const auto *p = find_preset(name);
  if (!p) throw std::runtime_error("missing preset " + std::string(name));
  return parse_config(nlohmann::json::parse(p->json));
}

fs::path fresh_dir(const std::string &name) {
  const auto dir = g_root / name;
  fs::remove_all(dir);
  return dir;
}

RunOptions options_for(const fs::path &dir, bool allow_large = false) {
  RunOptions o;
  o.out_dir = dir;
  o.workers = g_workers;
  o.allow_large = allow_large;
  return o;
}

void require_ok(const RunResult &r) {
  if (r.failure) throw std::runtime_error("run failed: " + *r.failure);
}

// Final cost of every (cell label, seed) trace in a train output directory.
std::map<std::string, std::vector<double>> final_costs(const ExperimentConfig &config,
                                                       const fs::path &dir) {
  std::map<std::string, std::vector<double>> out;
  for (const auto &cell : config.cells) {
    const auto label = build_topology(*config.num_qubits, cell).label();
    for (auto seed : config.seeds) {
      const auto rows = read_csv(dir / (label + "_seed" + std::to_string(seed) + ".csv"));
      if (rows.empty()) throw std::runtime_error("empty trace for " + label);
      out[label].push_back(std::stod(rows.back().at(1)));
    }
  }
  return out;
}

std::string split_label(const std::vector<std::size_t> &split) {
  std::string s;
  for (std::size_t k = 0; k < split.size(); ++k) s += (k ? "-" : "") + std::to_string(split[k]);
  return s;
}

Outcome oracle_equivalence() {
  Rng rng(derive_seed(1, {"acceptance", "oracle"}));
  double worst = 0.0;
  for (int c = 0; c < 200; ++c) {
    const std::size_t nq = 2 + rng.next_u64() % 2;
    const std::size_t nodes = 1 + rng.next_u64() % 3;
    std::vector<std::size_t> split, residual;
    for (std::size_t i = 0; i < nodes; ++i) {
      split.push_back(1 + rng.next_u64() % 3);
      if (rng.next_u64() % 2) residual.push_back(i);
    }
    const auto t = make_topology(nq, split, residual);
    const auto p = random_parameters(t.num_params(), rng);
    const auto in = c % 2 ? oracle::random_state(nq, rng) : oracle::to_eigen(zero_state(nq));
    const auto got = forward(t, p, oracle::from_eigen(in, nq));
    worst = std::max(worst, oracle::max_abs_diff(oracle::to_eigen(got),
                                                 oracle::network_output(t, p, in)));
  }
  return {worst <= 1e-10, "200 cases, max amplitude diff " + fmt(worst)};
}

Outcome gradient_correctness() {
  std::size_t bad = 0, components = 0, fallbacks = 0;
  for (std::size_t k = 0; k < 50; ++k) {
    Rng rng(derive_seed(1, {"acceptance", "gradient", std::to_string(k)}));
    const std::size_t nq = 2 + k % 7;
    const std::vector<std::size_t> split{1 + k % 5, 5 - k % 5};
    const auto t = make_topology(nq, split, k % 2 ? std::vector<std::size_t>{0}
                                                  : std::vector<std::size_t>{});
    const auto p = random_parameters(t.num_params(), rng);
    GradientOptions opts;
    opts.workers = g_workers;
    const auto g = gradient_parameter_shift(t, p, opts);
    const auto fd = nq <= 4 ? oracle::fd_gradient(t, p, kDefaultFdStep)
                            : gradient_finite_difference(t, p, kDefaultFdStep, g_workers);
    for (std::size_t j = 0; j < p.size(); ++j) {
      ++components;
      if (std::abs(g.values[j] - fd[j]) > std::max(1e-6, 1e-4 * std::abs(fd[j]))) ++bad;
    }
    fallbacks += g.fallbacks.size();
  }
  return {bad == 0, "50 instances, " + std::to_string(components) + " components, " +
                        std::to_string(bad) + " out of tolerance, " + std::to_string(fallbacks) +
                        " fallbacks"};
}

Outcome depth_accounting() {
  const std::vector<std::size_t> s11{1, 1}, s51{5, 1}, s42{4, 2};
  const bool ok = effective_depth_total(2, 5) == 10 && effective_depth_split(s11, 5) == 12 &&
                  effective_depth_split(s51, 6) == 30 && effective_depth_split(s42, 6) == 30 &&
                  effective_depth_split(s51, 7) == 32 && effective_depth_split(s42, 7) == 32 &&
                  effective_depth_total(7, 6) == 31;
  return {ok, "10 / 12 / 30 / 30 / 32 / 32 / 31"};
}

Outcome parameter_count() {
  const auto c = build_circuit(5, 6);
  return {c.num_params() == 60 && c.gates().size() == 84,
          std::to_string(c.num_params()) + " parameters, " + std::to_string(c.gates().size()) +
              " gates"};
}

Outcome training_contrast_8q() {
  const auto config = load_preset("two-node-8q");
  const auto dir = fresh_dir("two-node-8q");
  require_ok(run_train(config, options_for(dir)));
  const auto costs = final_costs(config, dir);
  bool ok = true;
  std::string detail;
  for (const auto &cell : config.cells) {
    if (!cell.residual_points.empty()) continue;
    const auto plain = build_topology(8, cell).label();
    const auto res = build_topology(8, {cell.depth_split, {0}}).label();
    const double mp = median(costs.at(plain)), mr = median(costs.at(res));
    const bool cell_ok = mr < 0.2 && mp > mr + 0.3;
    ok = ok && cell_ok;
    detail += split_label(cell.depth_split) + " plain " + fmt(mp) + " res " + fmt(mr) +
              (cell_ok ? "; " : " (x); ");
  }
  return {ok, "median final cost " + detail};
}

Outcome training_contrast_6q() {
  const auto config = load_preset("two-node-6q");
  const auto dir = fresh_dir("two-node-6q");
  require_ok(run_train(config, options_for(dir)));
  const auto costs = final_costs(config, dir);
  bool ok = true;
  std::string detail;
  for (const std::vector<std::size_t> split : {std::vector<std::size_t>{5, 1}, {4, 2}}) {
    const auto &plain = costs.at(build_topology(6, {split, {}}).label());
    const auto &res = costs.at(build_topology(6, {split, {0}}).label());
    int res_wins = 0;
    bool converged = true;
    for (std::size_t s = 0; s < plain.size(); ++s) {
      converged = converged && plain[s] < 0.3 && res[s] < 0.3;
      res_wins += res[s] <= plain[s];
    }
    ok = ok && converged && res_wins >= 2;
    detail += split_label(split) + ": max plain " + fmt(*std::max_element(plain.begin(), plain.end())) +
              " max res " + fmt(*std::max_element(res.begin(), res.end())) + " res<=plain " +
              std::to_string(res_wins) + "/3; ";
  }
  return {ok, detail};
}

Outcome landscape_flatness() {
  auto config = load_preset("landscape-8q");
  config.cells = {{{3, 3}, {}}, {{3, 3}, {0}}};
  const auto dir = fresh_dir("landscape-8q");
  require_ok(run_landscape(config, options_for(dir)));
  std::map<std::string, double> flat;
  for (const auto &row : read_csv(dir / "flatness_summary.csv")) flat[row.at(0)] = std::stod(row.at(2));
  const double fp = flat.at("plain_3-3"), fr = flat.at("res_3-3_r0");
  return {fp >= 0.8 && fr <= fp - 0.1,
          "flat_fraction plain " + fmt(fp) + " res " + fmt(fr) + " (need plain >= 0.8, res <= plain - 0.1)"};
}

Outcome variance_decay() {
  const auto config = load_preset("variance-bp");
  const auto dir = fresh_dir("variance-bp");
  require_ok(run_variance(config, options_for(dir)));
  const auto plain = read_csv(dir / "plain_3-3_seed1_variance.csv");
  const auto res = read_csv(dir / "res_5-1_r0_seed1_variance.csv");
  const double p4 = std::stod(plain.front().at(1)), p10 = std::stod(plain.back().at(1));
  const double r10 = std::stod(res.back().at(1));
  const bool decay = p4 >= 10 * p10;
  const bool matched = r10 > p10;
  return {decay && matched, "plain var 4q " + fmt(p4) + " -> 10q " + fmt(p10) + " (ratio " +
                                fmt(p4 / p10) + "), res (5,1) 10q " + fmt(r10) +
                                (decay ? "" : " [decay < 10x]") +
                                (matched ? "" : " [res <= plain at 10q]")};
}

Outcome three_node_ordering() {
  const auto config = load_preset("three-node-10q");
  const auto dir = fresh_dir("three-node-10q");
  require_ok(run_train(config, options_for(dir)));
  const auto costs = final_costs(config, dir);
  bool ok = true;
  std::string detail;
  for (const auto &split : std::vector<std::vector<std::size_t>>{{2, 3, 1}, {3, 2, 1}, {4, 1, 1}}) {
    const double every = median(costs.at(build_topology(10, {split, {0, 1}}).label()));
    const double two = median(costs.at(build_topology(10, {split, {1}}).label()));
    const double first = median(costs.at(build_topology(10, {split, {0}}).label()));
    const bool cell_ok = two < 0.3 && first < 0.3 && every >= std::min(two, first) - 0.05;
    ok = ok && cell_ok;
    detail += split_label(split) + " every " + fmt(every) + " after-two " + fmt(two) +
              " after-first " + fmt(first) + (cell_ok ? "; " : " (x); ");
  }
  return {ok, "median final cost " + detail};
}

Outcome determinism() {
  std::size_t compared = 0, differing = 0;
  auto compare_dirs = [&](const fs::path &a, const fs::path &b) {
    for (const auto &entry : fs::directory_iterator(a)) {
      if (entry.path().extension() != ".csv") continue;
      ++compared;
      if (slurp(entry.path()) != slurp(b / entry.path().filename())) ++differing;
    }
  };
  using Runner = RunResult (*)(const ExperimentConfig &, const RunOptions &);
  const std::vector<std::pair<std::string, Runner>> runs{
      {"two-node-6q", run_train}, {"hardware-protocol-5q", run_train},
      {"landscape-smoke", run_landscape}, {"landscape-6q", run_landscape}};
  for (const auto &[name, runner] : runs) {
    const auto config = load_preset(name);
    const auto a = fresh_dir(name + "-rerun-a");
    const auto b = fresh_dir(name + "-rerun-b");
    auto oa = options_for(a);
    auto ob = options_for(b);
    oa.workers = 1;
    require_ok(runner(config, oa));
    require_ok(runner(config, ob));
    compare_dirs(a, b);
  }
  return {compared > 0 && differing == 0, std::to_string(compared) + " CSV files compared, " +
                                              std::to_string(differing) + " differ"};
}

Outcome large_presets() {
  bool ok = true;
  std::string detail;
  for (const std::string name : {"residual-15q", "residual-20q"}) {
    auto config = load_preset(name);
    config.cells = {{{5, 1}, {0}}};
    const auto dir = fresh_dir(name);
    const auto result = run_train(config, options_for(dir, true));
    if (result.failure) {
      ok = false;
      detail += name + " failed: " + *result.failure + "; ";
      continue;
    }
    const auto costs = final_costs(config, dir).begin()->second;
    const double worst = *std::max_element(costs.begin(), costs.end());
    ok = ok && worst < 0.3;
    detail += name + " (5,1) final " + fmt(worst) + "; ";
  }
  return {ok, detail};
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double time_limit_s; // <= 0 means unbounded
  bool large;
};

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Acceptance checks"};
  bool large = false, large_only = false;
  std::string root = (fs::temp_directory_path() / "resqnet_acceptance").string();
  app.add_option("--workers", g_workers, "OpenMP worker threads");
  app.add_flag("--large", large, "Also run the 15/20-qubit check");
  app.add_flag("--large-only", large_only, "Run only the 15/20-qubit check");
  app.add_option("--out", root, "Scratch directory for run outputs");
  CLI11_PARSE(app, argc, argv);
  g_root = root;
  fs::create_directories(g_root);

  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence, 10, false},
      {2, "gradient correctness", gradient_correctness, 120, false},
      {3, "depth accounting", depth_accounting, 0, false},
      {4, "parameter count", parameter_count, 0, false},
      {5, "training contrast 8q", training_contrast_8q, 900, false},
      {6, "training contrast 6q", training_contrast_6q, 0, false},
      {7, "landscape flatness 8q", landscape_flatness, 300, false},
      {8, "variance decay", variance_decay, 600, false},
      {9, "three-node ordering 10q", three_node_ordering, 0, false},
      {10, "determinism", determinism, 0, false},
      {11, "15/20-qubit presets", large_presets, 0, true},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const bool selected = large_only ? c.large : (!c.large || large);
    if (!selected) {
      std::cout << "criterion " << c.id << " SKIP " << c.name << ": opt-in (--large)"
                << std::endl;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      out.pass = false;
      out.detail += " [over " + fmt(c.time_limit_s) + " s budget]";
    }
    failures += !out.pass;
    std::cout << "criterion " << c.id << (out.pass ? " PASS " : " FAIL ") << c.name << ": "
              << out.detail << " (" << fmt(secs) << " s)" << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
