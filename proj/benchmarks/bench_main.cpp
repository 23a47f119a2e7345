#include <benchmark/benchmark.h>

#include "hca/automaton.hpp"
#include "hca/bxy.hpp"
#include "hca/entropy.hpp"
#include "hca/hilbert.hpp"
#include "hca/kari.hpp"
#include "hca/rng.hpp"

using namespace hca;

static void BM_HilbertPath(benchmark::State& state) {
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = hilbert_path(HilbertVariant::a, level);
        benchmark::DoNotOptimize(p.data());
    }
    state.SetItemsProcessed(state.iterations() * (1LL << (2 * state.range(0))));
}
BENCHMARK(BM_HilbertPath)->DenseRange(4, 10, 2);

static void BM_KariValiditySweep(benchmark::State& state) {
    auto tiles = KariTileSet::instance();
    const int side = static_cast<int>(state.range(0));
    Grid grid(tiles, side, side);
    for (std::size_t i = 0; i < grid.cell_count(); ++i)
        grid.cells()[i] =
            static_cast<std::uint32_t>(bounded(counter_rng(1, 0, i), tiles->tile_count()));
    for (auto _ : state) {
        int valid = 0;
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) valid += grid.valid_at({x, y});
        benchmark::DoNotOptimize(valid);
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_KariValiditySweep)->Arg(16)->Arg(32)->Arg(64);

static void BM_StepThroughput(benchmark::State& state) {
    auto tiles = KariTileSet::instance();
    BxyResult r = build_bxy(tiles, 4, Corner::NE, HilbertVariant::a, 1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    StepPlan plan = make_step_plan(r.grid);
    std::vector<std::uint32_t> gamma(r.grid.cell_count());
    for (std::size_t i = 0; i < gamma.size(); ++i)
        gamma[i] = static_cast<std::uint32_t>(bounded(counter_rng(2, 0, i), 2));
    std::vector<std::uint32_t> out;
    for (auto _ : state) {
        plan_step(plan, z2, gamma, out);
        gamma.swap(out);
        benchmark::DoNotOptimize(gamma.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(gamma.size()));
}
BENCHMARK(BM_StepThroughput);

static void BM_CountWordsExact(benchmark::State& state) {
    Grid grid(simple_tileset(2), 14, 1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    std::vector<Cell> window{{0, 0}};
    const int horizon = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WordSet w = count_words_exact(grid, z2, window, horizon);
        benchmark::DoNotOptimize(w.distinct());
    }
}
BENCHMARK(BM_CountWordsExact)->DenseRange(6, 12, 2);

static void BM_BuildBxy(benchmark::State& state) {
    auto tiles = KariTileSet::instance();
    const int level = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BxyResult r = build_bxy(tiles, level, Corner::NE, HilbertVariant::a);
        benchmark::DoNotOptimize(r.grid.cells().data());
    }
}
BENCHMARK(BM_BuildBxy)->DenseRange(1, 4, 1);

BENCHMARK_MAIN();
