// Kernel and gradient throughput: serial reference vs OpenMP kernels, and
// gradient evaluation across worker counts.

#include "resqnet/circuit.hpp"
#include "resqnet/gradients.hpp"
#include "resqnet/kernels.hpp"
#include "resqnet/network.hpp"
#include "resqnet/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using resqnet::Complex;

std::vector<Complex> uniform_state(std::size_t n) {
  return std::vector<Complex>(std::size_t{1} << n, Complex(1.0 / double(1u << (n / 2)), 0.0));
}

template <auto Kernel>
void bench_rotation(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto amps = uniform_state(n);
  std::size_t q = 0;
  for (auto _ : state) {
    Kernel(amps, n, q, 0.3);
    q = (q + 1) % n;
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void bench_cnot(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto amps = uniform_state(n);
  std::size_t q = 0;
  for (auto _ : state) {
    Kernel(amps, n, q, q + 1);
    q = (q + 1) % (n - 1);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void bench_gradient(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto workers = static_cast<int>(state.range(1));
  const auto t = resqnet::make_topology(n, {5, 1}, {0});
  resqnet::Rng rng(1);
  const auto p = resqnet::random_parameters(t.num_params(), rng);
  resqnet::GradientOptions opts;
  opts.workers = workers;
  for (auto _ : state) {
    auto g = resqnet::gradient_parameter_shift(t, p, opts);
    benchmark::DoNotOptimize(g.values.data());
  }
}

} // namespace

BENCHMARK(bench_rotation<resqnet::kernels::serial::apply_ry>)->Arg(16)->Arg(20);
BENCHMARK(bench_rotation<resqnet::kernels::parallel::apply_ry>)->Arg(16)->Arg(20);
BENCHMARK(bench_rotation<resqnet::kernels::serial::apply_rx>)->Arg(20);
BENCHMARK(bench_rotation<resqnet::kernels::parallel::apply_rx>)->Arg(20);
BENCHMARK(bench_cnot<resqnet::kernels::serial::apply_cnot>)->Arg(20);
BENCHMARK(bench_cnot<resqnet::kernels::parallel::apply_cnot>)->Arg(20);
BENCHMARK(bench_gradient)->Args({8, 1})->Args({8, 4})->Args({10, 1})->Args({10, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
