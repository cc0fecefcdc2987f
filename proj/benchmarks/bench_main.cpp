#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "salt/fft.hpp"
#include "salt/solver.hpp"
#include "salt/spectral.hpp"

namespace {

using namespace salt;

GridField noise_field(const Grid& g) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z;
  std::vector<double> v(g.size());
  for (auto& x : v) x = z(rng);
  return GridField(g, std::move(v));
}

Grid grid_for(const benchmark::State& state) {
  return Grid(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
}

void BM_ForwardInverse(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto f = noise_field(g);
  for (auto _ : state) benchmark::DoNotOptimize(to_grid(to_spectral(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_ForwardInverse)->Args({1, 256})->Args({1, 4096})->Args({2, 64})->Args({2, 256});

void BM_BesselMultiplier(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto F = to_spectral(noise_field(g));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_multiplier(F, 4.0));
}
BENCHMARK(BM_BesselMultiplier)->Args({1, 4096})->Args({2, 256});

void BM_DealiasedProduct(benchmark::State& state) {
  const Grid g = grid_for(state);
  const auto F = to_spectral(noise_field(g));
  for (auto _ : state) benchmark::DoNotOptimize(product(F, F));
}
BENCHMARK(BM_DealiasedProduct)->Args({1, 4096})->Args({2, 128});

void BM_Step(benchmark::State& state) {
  const auto model = static_cast<ModelKind>(state.range(0));
  SimConfig cfg = SimConfig::defaults(model);
  cfg.N = static_cast<std::size_t>(state.range(1));
  cfg.scheme = state.range(2) == 0 ? Scheme::ItoEuler : Scheme::StratHeun;
  const ModelOps ops = make_ops(cfg);
  const ModelState X = initial_state(cfg);
  const std::vector<double> dW(ops.noise_count(), 1e-2);
  const CutoffParam R(cfg.R);
  for (auto _ : state) {
    if (cfg.scheme == Scheme::ItoEuler) {
      benchmark::DoNotOptimize(step_ito_em(X, ops, dW, cfg.dt, R));
    } else {
      benchmark::DoNotOptimize(step_strat_heun(X, ops, dW, cfg.dt, R));
    }
  }
}
BENCHMARK(BM_Step)
    ->Args({static_cast<long>(ModelKind::Sch2), 256, 0})
    ->Args({static_cast<long>(ModelKind::Sch2), 256, 1})
    ->Args({static_cast<long>(ModelKind::Ccf), 256, 1})
    ->Args({static_cast<long>(ModelKind::Sqg), 64, 1});

}  // namespace

BENCHMARK_MAIN();
