#include <benchmark/benchmark.h>

#include "qeffects/evolution.hpp"
#include "qeffects/explorer.hpp"

using namespace qeffects;

namespace {

std::pair<Effect, Effect> pair_of(Index dim) {
    auto rng = explorer::trial_rng(1, static_cast<std::uint64_t>(dim));
    Effect a = explorer::random_effect(dim, rng);
    return {a, explorer::random_effect(dim, rng)};
}

}  // namespace

static void Eigh(benchmark::State& state) {
    const auto [a, b] = pair_of(state.range(0));
    const HermitianOperator h(a.matrix());
    for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(Eigh)->DenseRange(2, 8, 2);

static void TimeSeqProduct(benchmark::State& state) {
    const auto [a, b] = pair_of(state.range(0));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(time_seq_product(a, b, t));
        t += 1e-3;
    }
}
BENCHMARK(TimeSeqProduct)->DenseRange(2, 8, 2);

static void ConstancyClassifier(benchmark::State& state) {
    const auto [a, b] = pair_of(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(constancy_classifier(a, b));
}
BENCHMARK(ConstancyClassifier)->DenseRange(2, 8, 2);

static void SymmetryGapEval(benchmark::State& state) {
    const auto [a, b] = pair_of(state.range(0));
    const explorer::SymmetryGap gap(a, b);
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gap(t));
        t += 1e-3;
    }
}
BENCHMARK(SymmetryGapEval)->DenseRange(2, 8, 2);

static void MinimizeGap(benchmark::State& state) {
    const auto [a, b] = pair_of(state.range(0));
    const explorer::ScanConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(explorer::minimize_gap(a, b, cfg));
}
BENCHMARK(MinimizeGap)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
