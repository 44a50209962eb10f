#pragma once

#include <string>
#include <vector>

#include "m2d/grid.hpp"
#include "m2d/metrics.hpp"

namespace m2d {

struct PipelineConfig {
    i64 k = 0;
    i64 eps_num = 1, eps_den = 1;  // candidate filter accuracy, default 1
    u64 seed = 0;
    enum class Algo { Auto, Naive, Kangaroo, Full } algo = Algo::Auto;
};

struct RunReport {
    i64 n = 0, m = 0, k = 0;
    std::string algo;
    i64 windows = 0;
    i64 nprime = 0;
    i64 branch_kangaroo = 0;   // windows resolved by verification
    i64 branch_full = 0;       // windows resolved by the decomposition pipeline
    i64 q_total = 0, q_max = 0;
    i64 pattern_pieces_max = 0;
    i64 text_pieces_total = 0;
    i64 trivial_text_partitions = 0;
    i64 merge_disagreements = 0;  // overlapping windows that disagreed (candidate misses)
    double ms_total = 0, ms_approx = 0, ms_verify = 0, ms_periods = 0,
           ms_pattern = 0, ms_text = 0, ms_sparse = 0, ms_dense = 0;
    Metrics work;  // counters accumulated over the run

    std::string to_text() const;
};

struct TextCover {
    i64 nprime = 0;
    std::vector<Point> origins;
};

// Square windows of even side at most 3m/2 covering every offset.
TextCover cover_text(i64 n, i64 m);

// One window: candidate filter, then either kangaroo verification or the
// periodicity pipeline depending on the candidate count.
OffsetCounts match_window(const Grid2D& p, const Grid2D& tw, i64 k,
                          const PipelineConfig& cfg, u64 window_seed,
                          RunReport* report);

// min(k+1, Ham(T, P+q)) for every offset, via covering windows.
OffsetCounts kmismatch(const Grid2D& p, const Grid2D& t, const PipelineConfig& cfg,
                       RunReport* report = nullptr);

u64 mix_seed(u64 seed, u64 a, u64 b);

}  // namespace m2d
