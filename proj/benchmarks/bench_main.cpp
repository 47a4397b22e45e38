#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "benfordxy/firstdigit.hpp"
#include "benfordxy/windowscan.hpp"
#include "benfordxy/xy_exact.hpp"

using namespace bxy;

namespace {

void BM_FirstDigit(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-12, 12);
  std::vector<double> xs(4096);
  for (auto& x : xs) x = std::pow(10.0, u(rng));
  for (auto _ : state) {
    for (double x : xs) benchmark::DoNotOptimize(first_significant_digit(x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_FirstDigit);

void BM_FiniteMagnetization(benchmark::State& state) {
  const xy::FiniteChain chain(static_cast<int>(state.range(0)), 0.5);
  double l = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain.magnetization(l));
    l += 1e-9;
  }
}
BENCHMARK(BM_FiniteMagnetization)->Arg(14)->Arg(40);

void BM_InfiniteMagnetization(benchmark::State& state) {
  const xy::InfiniteChain chain(1.0, state.range(0) ? 1e4 : xy::kZeroTemperature);
  double l = 0.99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain.magnetization(l));
    l += 1e-9;
  }
  state.SetLabel(std::to_string(xy::QuadratureOptions{}.total_nodes()) + " nodes");
}
BENCHMARK(BM_InfiniteMagnetization)->Arg(0)->Arg(1);

void BM_QuadratureSetup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(xy::InfiniteChain(1.0));
}
BENCHMARK(BM_QuadratureSetup);

void BM_ScanFiniteChain(benchmark::State& state) {
  ScanConfig c;
  c.gamma = 0.5;
  c.n_sites = 30;
  c.lambda = {0.9, 1.1, 0.01};
  c.samples_per_window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(c, {1}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.lambda.size()) * state.range(0));
}
BENCHMARK(BM_ScanFiniteChain)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
