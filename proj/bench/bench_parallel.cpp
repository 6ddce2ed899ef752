#include <benchmark/benchmark.h>

#include "implode/arrangement.hpp"
#include "implode/verify.hpp"

using implode::Exec;

namespace {

implode::arrangement::Arrangement a4() {
  return implode::arrangement::from_root_system(implode::rootsys::build_root_system('A', 4));
}

void BM_BroadSubsets(benchmark::State& state, Exec exec) {
  const auto arr = a4();
  for (auto _ : state) benchmark::DoNotOptimize(implode::arrangement::broad_subsets(arr, exec));
}

void BM_Flats(benchmark::State& state, Exec exec) {
  const auto arr = a4();
  for (auto _ : state) benchmark::DoNotOptimize(implode::arrangement::flats(arr, exec));
}

void BM_Suite(benchmark::State& state, const char* suite, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(implode::verify::run(suite, 7, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BroadSubsets, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BroadSubsets, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Flats, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Flats, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, phi_serial, "phi-separation", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, phi_parallel, "phi-separation", Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, weyl_serial, "weyl-equivariance", Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, weyl_parallel, "weyl-equivariance", Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
