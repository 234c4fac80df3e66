// Serial vs OpenMP: dense series expansion and the round-trip batch.

#include "e8/acampo.hpp"
#include "e8/roundtrip.hpp"

#include <benchmark/benchmark.h>

namespace {

// Series of a three-branch curve; dense in three variables.
e8::BinomialProduct three_branch_series() {
  e8::RoundTripOptions opt;
  opt.seed = 5;
  opt.mode = e8::RoundTripMode::curves;
  opt.branches = 3;
  opt.max_blowups = 4;
  for (std::size_t i = 0;; ++i) {
    const auto g = e8::roundtrip_input(opt, i);
    if (g.branches().size() == 3) return e8::poincare_curve(g);
  }
}

void BM_expand_serial(benchmark::State& state) {
  const auto p = three_branch_series();
  for (auto _ : state) benchmark::DoNotOptimize(e8::expand(p, state.range(0)));
}

void BM_expand_parallel(benchmark::State& state) {
  const auto p = three_branch_series();
  for (auto _ : state) benchmark::DoNotOptimize(e8::expand_parallel(p, state.range(0)));
}

e8::RoundTripOptions batch(e8::RoundTripMode mode) {
  e8::RoundTripOptions opt;
  opt.seed = 9;
  opt.count = 64;
  opt.mode = mode;
  opt.branches = 3;
  opt.max_blowups = 8;
  return opt;
}

void BM_roundtrip_serial(benchmark::State& state) {
  const auto opt = batch(static_cast<e8::RoundTripMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e8::run_roundtrips_serial(opt));
}

void BM_roundtrip_parallel(benchmark::State& state) {
  const auto opt = batch(static_cast<e8::RoundTripMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e8::run_roundtrips(opt));
}

}  // namespace

BENCHMARK(BM_expand_serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_expand_parallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_roundtrip_serial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_roundtrip_parallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
