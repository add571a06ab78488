#include <benchmark/benchmark.h>

#include "latframe/coordinates.hpp"
#include "latframe/corpus.hpp"
#include "latframe/reconstruction.hpp"

namespace {

using namespace latframe;

void BM_BuildOrugaLattice(benchmark::State& state) {
    const auto g = oruga(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(FramingLattice::build(g).size());
}
BENCHMARK(BM_BuildOrugaLattice)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BuildCaracolLattice(benchmark::State& state) {
    const auto g = caracol(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(FramingLattice::build(g).size());
}
BENCHMARK(BM_BuildCaracolLattice)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MaximalCliques(benchmark::State& state) {
    const RouteCatalog catalog(oruga(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(catalog).size());
}
BENCHMARK(BM_MaximalCliques)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

// Rebuilds every element of the lattice from its lower cover labels.
void BM_ReconstructAll(benchmark::State& state) {
    const auto L = FramingLattice::build(oruga(static_cast<int>(state.range(0))));
    std::vector<BrickClique> labels;
    for (int x = 0; x < L.size(); ++x) labels.push_back(down_bricks(L, x));
    for (auto _ : state)
        for (const auto& T : labels) benchmark::DoNotOptimize(reconstruct(L.catalog(), T));
    state.SetItemsProcessed(state.iterations() * L.size());
}
BENCHMARK(BM_ReconstructAll)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LeftCoordinates(benchmark::State& state) {
    const auto L = FramingLattice::build(oruga(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(all_ccl(L).size());
    state.SetItemsProcessed(state.iterations() * L.size());
}
BENCHMARK(BM_LeftCoordinates)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_RandomGraphLattice(benchmark::State& state) {
    const auto g = random_framed_graph({static_cast<std::uint64_t>(state.range(0)), 6, 10});
    for (auto _ : state) benchmark::DoNotOptimize(FramingLattice::build(g).size());
}
BENCHMARK(BM_RandomGraphLattice)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
