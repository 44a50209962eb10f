#pragma once

#include <cstdint>

namespace m2d {

// Work counters for performance sanity checks. Single-threaded accumulation;
// reset before a run, read after.
struct Metrics {
    std::uint64_t conv_cells = 0;   // total transform cells across NTT calls
    std::uint64_t correlations = 0; // number of exact correlations
    std::uint64_t dp_cells = 0;     // score-field cells touched by the prefix DP
    std::uint64_t box_ops = 0;      // row/entry operations in box counting
    std::uint64_t lce_jumps = 0;    // kangaroo LCE queries

    void reset() { *this = Metrics{}; }
    static Metrics& get() {
        thread_local Metrics m;
        return m;
    }
};

}  // namespace m2d
