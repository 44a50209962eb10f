#pragma once

#include <vector>

#include "m2d/grid.hpp"

namespace m2d {

// Longest-common-extension structure: suffix ranks + LCP + sparse-table RMQ.
struct LceIndex {
    std::vector<Symbol> seq;
    std::vector<std::int32_t> sa;
    std::vector<std::int32_t> rank;
    std::vector<std::int32_t> lcp;           // lcp[i] = lcp(sa[i], sa[i+1])
    std::vector<std::vector<std::int32_t>> table;  // sparse table over lcp

    i64 size() const { return (i64)seq.size(); }
    // length of the longest common prefix of suffixes i and j
    i64 lce(i64 i, i64 j) const;
};

LceIndex build_lce(const std::vector<Symbol>& s);

// Positions (relative to the windows) of the first min(cap, all) mismatches
// between seq[i, i+len) and seq[j, j+len), found by repeated LCE jumps.
std::vector<i64> kangaroo_mismatches(const LceIndex& idx, i64 i, i64 j, i64 len,
                                     i64 cap);

// Exact d_q = Ham(P+q, T) for every q in the list, by two-level kangaroo
// jumping over column identifiers and the linearisations.
std::vector<std::int64_t> verify_offsets(const Grid2D& p, const Grid2D& t,
                                         const std::vector<Point>& q);

// As verify_offsets with all offsets and an early-exit cap of k+1 per offset.
OffsetCounts baseline_kn2(const Grid2D& p, const Grid2D& t, i64 k);

// Shared machinery for the two entry points above; cap < 0 means uncapped.
struct KangarooMatcher {
    i64 n = 0, m = 0;
    LceIndex lin;      // over linearize(T) $ linearize(P)
    LceIndex ids;      // over column-window identifiers
    i64 p_lin_start = 0;
    i64 p_ids_start = 0;

    KangarooMatcher(const Grid2D& p, const Grid2D& t);
    // min(cap+1, Ham(P+q, T)) when cap >= 0, exact distance otherwise
    std::int64_t distance(Point q, i64 cap) const;
};

}  // namespace m2d
