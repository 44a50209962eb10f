#include <benchmark/benchmark.h>

#include "m2d/bench.hpp"

using namespace m2d;

static void BM_FullPipelinePeriodic(benchmark::State& state) {
    i64 n = state.range(0), m = n / 2, k = state.range(1);
    std::mt19937_64 rng(5);
    auto [p, t] = gen_planted_periodic(n, m, k, rng);
    PipelineConfig cfg;
    cfg.k = k;
    cfg.algo = PipelineConfig::Algo::Full;
    for (auto _ : state) benchmark::DoNotOptimize(kmismatch(p, t, cfg));
}
BENCHMARK(BM_FullPipelinePeriodic)->Args({128, 16})->Args({256, 16})->Args({512, 16});

static void BM_AutoPipelineUniform(benchmark::State& state) {
    i64 n = state.range(0), m = n / 2, k = state.range(1);
    std::mt19937_64 rng(6);
    Grid2D t = gen_uniform(n, 4, rng);
    Grid2D p = gen_uniform(m, 4, rng);
    PipelineConfig cfg;
    cfg.k = k;
    for (auto _ : state) benchmark::DoNotOptimize(kmismatch(p, t, cfg));
}
BENCHMARK(BM_AutoPipelineUniform)->Args({128, 8})->Args({256, 16});

BENCHMARK_MAIN();
