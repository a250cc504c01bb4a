#include <benchmark/benchmark.h>

#include "ferrers/bijections.hpp"
#include "ferrers/enumeration.hpp"

using namespace ferrers;

static void BM_CountLonesumStaircase(benchmark::State& state) {
    const FerrersShape s = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(countFillings(s, {PatternKind::kLonesum}, {.jobs = 1}).count);
    }
}
BENCHMARK(BM_CountLonesumStaircase)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_CountGammaFreeRectangle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const FerrersShape s = fromPartition(std::vector<int>(n, static_cast<int>(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(countFillings(s, {PatternKind::kGammaFree}, {.jobs = 1}).count);
    }
}
BENCHMARK(BM_CountGammaFreeRectangle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Genocchi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(genocchi(n));
}
BENCHMARK(BM_Genocchi)->DenseRange(4, 8, 2);

static void BM_NuRoundtrip(benchmark::State& state) {
    const FerrersShape shape = fromPartition({4, 4, 3, 2});
    const std::vector<DumontPermutation> perms = enumerateDumont(shape);
    const LabelContext ctx = LabelContext::of(shape);
    for (auto _ : state) {
        for (const DumontPermutation& p : perms) benchmark::DoNotOptimize(nuDecode(nuEncode(p), ctx));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
}
BENCHMARK(BM_NuRoundtrip);

static void BM_ZetaRoundtrip(benchmark::State& state) {
    const FerrersShape shape = fromPartition({4, 4, 3, 2});
    std::vector<Filling> fillings;
    forEachFilling(shape, {PatternKind::kLonesum, true, false}, [&](const Filling& f) { fillings.push_back(f); });
    for (auto _ : state) {
        for (const Filling& f : fillings) benchmark::DoNotOptimize(zetaDecode(zetaEncode(f), shape));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fillings.size()));
}
BENCHMARK(BM_ZetaRoundtrip);
BENCHMARK_MAIN();
