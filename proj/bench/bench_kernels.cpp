// Serial reference path vs OpenMP path for the sample sweeps.

#include <benchmark/benchmark.h>

#include "adsrigid/constructions.hpp"
#include "adsrigid/kernels.hpp"

using namespace adsrigid;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::Serial : Exec::Parallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial"
                                     : "parallel x" + std::to_string(kernels::thread_count()));
}

void BM_GaussCodazzi(benchmark::State& state) {
  const Immersion f = graph_bump();
  const auto points = kernels::sample_points(f.box, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto r = kernels::gauss_codazzi_sweep(f, points, FdScheme{}, exec_of(state));
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  set_label(state);
}

void BM_LeftCurvature(benchmark::State& state) {
  const Immersion f = graph_bump();
  const auto points = kernels::sample_points(f.box, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto r = kernels::left_curvature_sweep(f, points, FdScheme{}, exec_of(state));
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  set_label(state);
}

void BM_LinearChain(benchmark::State& state) {
  for (auto _ : state) {
    auto s = kernels::linear_chain_sweep(static_cast<std::size_t>(state.range(0)), 11,
                                         exec_of(state));
    benchmark::DoNotOptimize(s.max_tr_b);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_GaussCodazzi)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeftCurvature)->ArgsProduct({{64, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearChain)->ArgsProduct({{10000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
