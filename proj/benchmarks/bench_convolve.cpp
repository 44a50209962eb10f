#include <benchmark/benchmark.h>

#include <random>

#include "m2d/convolve.hpp"

using namespace m2d;

static void BM_CorrelateCounts(benchmark::State& state) {
    std::mt19937_64 rng(1);
    size_t n = (size_t)state.range(0);
    std::vector<std::uint32_t> a(n), b(n / 2);
    for (auto& x : a) x = rng() & 1;
    for (auto& x : b) x = rng() & 1;
    for (auto _ : state) benchmark::DoNotOptimize(correlate_counts(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CorrelateCounts)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void BM_HammingPerChar2D(benchmark::State& state) {
    std::mt19937_64 rng(2);
    i64 n = state.range(0), m = n / 2;
    Grid2D p(m, m), t(n, n);
    for (auto& c : p.cells) c = (Symbol)(rng() % 4);
    for (auto& c : t.cells) c = (Symbol)(rng() % 4);
    for (auto _ : state) benchmark::DoNotOptimize(hamming_per_char_2d(p, t));
}
BENCHMARK(BM_HammingPerChar2D)->Arg(64)->Arg(128)->Arg(256);
