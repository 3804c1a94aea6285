#include <benchmark/benchmark.h>

#include "nearfield/atlas.hpp"
#include "nearfield/oracle.hpp"

namespace {

using nearfield::ApertureSpec;

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = ApertureSpec::uniform_linear_array(40, 0.5);
  const nearfield::SweepRange range{0.0, 180.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearfield::sweep_serial(spec, range));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = ApertureSpec::uniform_linear_array(40, 0.5);
  const nearfield::SweepRange range{0.0, 180.0, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearfield::sweep(spec, range));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ValidateSerial(benchmark::State& state) {
  const auto spec = ApertureSpec::normalized(19.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nearfield::validate_all_serial(spec, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ValidateParallel(benchmark::State& state) {
  const auto spec = ApertureSpec::normalized(19.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearfield::validate_all(spec, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(721)->Arg(10000)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(721)->Arg(10000)->UseRealTime();
BENCHMARK(BM_ValidateSerial)->Arg(1000)->UseRealTime();
BENCHMARK(BM_ValidateParallel)->Arg(1000)->UseRealTime();

BENCHMARK_MAIN();
