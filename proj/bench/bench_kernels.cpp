#include <benchmark/benchmark.h>

#include "zigzag/kernels.hpp"
#include "zigzag/verify.hpp"

using namespace zigzag;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_PhiPaintbox(benchmark::State& state) {
    const auto w = Paintbox::parse("+1/5,-1/3,-1/6,+3/10");
    for (auto _ : state) benchmark::DoNotOptimize(phi_w_level(w, state.range(0), exec_of(state)));
}

void BM_PhiGrowthModel(benchmark::State& state) {
    const auto model = example_models()[2];
    for (auto _ : state) benchmark::DoNotOptimize(phi_tw_level(model, state.range(0), exec_of(state)));
}

void BM_Classify(benchmark::State& state) {
    const auto t = example_models()[1].templ();
    for (auto _ : state) benchmark::DoNotOptimize(classify_level(t, state.range(0), exec_of(state)));
}

void BM_HarmonicDefects(benchmark::State& state) {
    const auto model = example_models()[0];
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_defects(model, state.range(0), exec_of(state)));
}

}  // namespace

BENCHMARK(BM_PhiPaintbox)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiGrowthModel)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HarmonicDefects)->ArgsProduct({{8, 11}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
