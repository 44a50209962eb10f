#pragma once

#include <random>
#include <string>
#include <vector>

#include "m2d/grid.hpp"
#include "m2d/pipeline.hpp"

namespace m2d {

// Deterministic instance generators for benchmarks and randomized suites.
Grid2D gen_uniform(i64 side, i64 sigma, std::mt19937_64& rng);
// Two-class lattice colouring plus scattered flips; distances stay near 2k
// at half of the offsets so the decomposition pipeline engages.
std::pair<Grid2D, Grid2D> gen_planted_periodic(i64 n, i64 m, i64 k,
                                               std::mt19937_64& rng);
// Uniform text with one pattern occurrence planted at <= k mismatches.
struct PlantedInstance {
    Grid2D pattern, text;
    Point offset;
};
PlantedInstance gen_planted_occurrence(i64 n, i64 m, i64 k, i64 sigma,
                                       std::mt19937_64& rng);

// uniform value in [0, bound) from raw engine output
inline i64 rnd_below(std::mt19937_64& rng, i64 bound) {
    return bound <= 1 ? 0 : (i64)(rng() % (u64)bound);
}

struct BenchRow {
    i64 n = 0, m = 0, k = 0;
    std::string algo;
    double millis = 0;
    i64 q_max = 0;
    std::string branch;
    std::string generator;
    int rep = 0;
    u64 conv_cells = 0, dp_cells = 0, box_ops = 0, lce_jumps = 0;
};

std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row);

// One measured pipeline run.
BenchRow run_bench_case(const Grid2D& p, const Grid2D& t, i64 k,
                        PipelineConfig::Algo algo, const std::string& algo_name,
                        const std::string& generator, int rep, u64 seed);

// Full sweep over sizes, ks, generators and algorithms. Sizes are text sides
// with m = n/2; the naive reference is emitted only for n <= 128.
std::vector<BenchRow> run_bench(const std::vector<i64>& sizes,
                                const std::vector<i64>& ks, int reps, u64 seed);

}  // namespace m2d
