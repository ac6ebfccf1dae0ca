#include <benchmark/benchmark.h>

#include "trec/auxiliary.hpp"
#include "trec/bipartite.hpp"
#include "trec/exact_dp.hpp"
#include "trec/minuncut.hpp"
#include "trec/reductions.hpp"

namespace {

trec::TemporalGraph path_instance(int n, int lifetime, std::uint64_t seed) {
    trec::GeneratorSpec spec;
    spec.n = n;
    spec.lifetime = lifetime;
    spec.family = trec::Family::AlwaysPath;
    spec.edges_per_snapshot = n / 2;  // n/2 components per snapshot
    spec.seed = seed;
    return trec::generate_random(spec);
}

// component count k = n/2, so state.range(0) drives the 2^(2k) transition term
void BM_BuildCostTable(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto g = path_instance(2 * k, 6, 7);
    for (auto _ : state) {
        auto table = trec::build_cost_table(g, trec::DpOptions{true, std::uint64_t{1} << 36});
        benchmark::DoNotOptimize(table.optimum());
    }
    state.SetComplexityN(1 << k);
}
BENCHMARK(BM_BuildCostTable)->DenseRange(4, 12, 2)->Complexity();

void BM_EnumerateColourings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto structure = trec::components(n, {});
    for (auto _ : state) {
        const auto set = trec::enumerate_colourings(structure, std::uint64_t{1} << 34);
        long long total = 0;
        for (std::uint64_t m = 0; m < set.size(); ++m) total += set.at(m)[0];
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_EnumerateColourings)->DenseRange(8, 16, 4);

void BM_BuildAuxiliary(benchmark::State& state) {
    const auto g = path_instance(static_cast<int>(state.range(0)), 8, 11);
    for (auto _ : state) {
        auto aux = trec::build_auxiliary(g);
        benchmark::DoNotOptimize(aux.structural_edge_count());
    }
}
BENCHMARK(BM_BuildAuxiliary)->RangeMultiplier(2)->Range(8, 64);

void BM_LocalSearch(benchmark::State& state) {
    const auto g = path_instance(static_cast<int>(state.range(0)), 8, 13);
    const auto aux = trec::build_auxiliary(g).as_static();
    for (auto _ : state) {
        auto r = trec::solve_minuncut_heuristic(aux, trec::LocalSearchOptions{5, 4});
        benchmark::DoNotOptimize(r.uncut);
    }
}
BENCHMARK(BM_LocalSearch)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactMinUnCut(benchmark::State& state) {
    const auto g = path_instance(static_cast<int>(state.range(0)), 3, 17);
    const auto aux = trec::build_auxiliary(g).as_static();
    for (auto _ : state) {
        auto r = trec::solve_minuncut_exact(aux);
        benchmark::DoNotOptimize(r.uncut);
    }
}
BENCHMARK(BM_ExactMinUnCut)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
