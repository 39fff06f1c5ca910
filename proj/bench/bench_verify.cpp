#include "rmlocus/caseanalysis.hpp"

#include <benchmark/benchmark.h>

using namespace rmlocus;

namespace {

AnalysisOptions options(benchmark::State& state) {
    AnalysisOptions o;
    o.samples = static_cast<int>(state.range(0));
    o.configurations = 20;
    return o;
}

void BM_VerifyAllSerial(benchmark::State& state) {
    auto f = default_field();
    auto o = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify_all_serial(f, o).theorem_verified);
}

void BM_VerifyAllParallel(benchmark::State& state) {
    auto f = default_field();
    auto o = options(state);
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(f, o).theorem_verified);
}

} // namespace

BENCHMARK(BM_VerifyAllSerial)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyAllParallel)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
