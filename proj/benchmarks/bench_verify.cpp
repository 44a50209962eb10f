#include <benchmark/benchmark.h>

#include <random>

#include "m2d/verify.hpp"

using namespace m2d;

static void BM_BaselineKn2(benchmark::State& state) {
    std::mt19937_64 rng(3);
    i64 n = state.range(0), m = n / 2, k = state.range(1);
    Grid2D p(m, m), t(n, n);
    for (auto& c : p.cells) c = (Symbol)(rng() % 2);
    for (auto& c : t.cells) c = (Symbol)(rng() % 2);
    for (auto _ : state) benchmark::DoNotOptimize(baseline_kn2(p, t, k));
}
BENCHMARK(BM_BaselineKn2)->Args({128, 8})->Args({128, 64})->Args({256, 16})->Args({256, 64});

static void BM_BuildLce(benchmark::State& state) {
    std::mt19937_64 rng(4);
    std::vector<Symbol> s((size_t)state.range(0));
    for (auto& c : s) c = (Symbol)(rng() % 4);
    for (auto _ : state) benchmark::DoNotOptimize(build_lce(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildLce)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();
