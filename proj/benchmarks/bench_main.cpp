#include <benchmark/benchmark.h>

#include "hypermatch/absorbing.hpp"
#include "hypermatch/augment.hpp"
#include "hypermatch/constructions.hpp"
#include "hypermatch/exact_solver.hpp"
#include "hypermatch/link.hpp"

using namespace hypermatch;

static void BM_ExactStar(benchmark::State& state) {
    const auto h = extremal_star(static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(h).matching.size());
}
BENCHMARK(BM_ExactStar)->DenseRange(9, 18, 3)->Unit(benchmark::kMillisecond);

static void BM_ExactRandom(benchmark::State& state) {
    const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(h).matching.size());
}
BENCHMARK(BM_ExactRandom)->DenseRange(9, 18, 3)->Unit(benchmark::kMillisecond);

static void BM_AugmentRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = random_hypergraph(n, 0.3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(augment_solve(h, n / 3).report.matching.size());
}
BENCHMARK(BM_AugmentRandom)->DenseRange(12, 24, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyFact1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_fact1().violations);
}
BENCHMARK(BM_VerifyFact1)->Unit(benchmark::kMicrosecond);

static void BM_Absorbs(benchmark::State& state) {
    const auto h = random_hypergraph(15, 0.5, 3);
    const Edge e = h.edges().front();
    const VertexSet t = VertexSet{12, 13, 14} - e.mask();
    for (auto _ : state) benchmark::DoNotOptimize(t.size() == 3 && absorbs(h, e, t));
}
BENCHMARK(BM_Absorbs);

static void BM_FindAbsorbing(benchmark::State& state) {
    const auto h = random_hypergraph(static_cast<std::size_t>(state.range(0)), 0.8, 4);
    for (auto _ : state) benchmark::DoNotOptimize(find_absorbing(h).success);
}
BENCHMARK(BM_FindAbsorbing)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
