// Serial reference against the OpenMP kernels on fixed windows. Each pair of
// benchmarks computes the same exact result; only the schedule differs.
#include "w1g/cochain.hpp"
#include "w1g/cohomology.hpp"
#include "w1g/random.hpp"
#include "w1g/turaev.hpp"

#include <benchmark/benchmark.h>

using namespace w1g;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_ResidualScan(benchmark::State& state) {
  Sampler rng(7);
  const auto c = coboundary_cochain(rng.tensor(2, 3, 6), 2);
  for (auto _ : state) benchmark::DoNotOptimize(residual_scan(c, exec_of(state)));
  label(state);
}

void BM_SoundnessScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certificate_soundness_scan(2, 1, exec_of(state)));
  label(state);
}

void BM_TuraevScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nontriviality_scan(2, 2, exec_of(state)));
  label(state);
}

void BM_BuildSystem(benchmark::State& state) {
  SystemOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_cocycle_system(1, 2, 3, Flavor::wedge, opts));
  label(state);
}

void BM_Eliminate(benchmark::State& state) {
  const auto sys = build_cocycle_system(1, 2, 3, Flavor::tensor);
  SolveOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(sys, opts));
  label(state);
}

}  // namespace

BENCHMARK(BM_ResidualScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SoundnessScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TuraevScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSystem)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eliminate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
