#pragma once

#include <array>
#include <map>
#include <vector>

#include "m2d/grid.hpp"
#include "m2d/tiling.hpp"

namespace m2d {

// Monochromatic pieces partitioning the pattern, indexed by character.
struct PatternPieces {
    Lattice lat;
    i64 m = 0;
    std::vector<TileStr> pieces;
    std::map<Symbol, std::vector<size_t>> by_char;
};

PatternPieces build_pattern_pieces(const Lattice& lat, std::vector<TileStr> pieces,
                                   i64 m);

// Anchors of the four-quadrant inclusion-exclusion for a plain subtile:
// |S ∩ X| = sum over i,j of (-1)^(i+j) |(D + w[i][j]) ∩ X| with all anchors
// congruent to gamma. Empty subtiles anchor everything at gamma.
struct CornerDecomp {
    std::array<std::array<Point, 2>, 2> w;
    i64 s0 = 0, s1 = 0, t0 = 0, t1 = 0;  // lattice-coordinate ranges, half open
    bool empty = false;
};

CornerDecomp corner_decompose(const Lattice& lat, const TruncSig& sig);

// For each point, the number of boxes whose eight signature constraints hold.
// All boxes must share the congruence class of their gamma.
std::vector<std::int64_t> count_boxes_containing(const Lattice& lat,
                                                 const std::vector<TruncSig>& boxes,
                                                 const std::vector<Point>& points);

// Per-class score storage in lattice coordinates: the window is a
// parallelogram with phi/psi-collinear sides, i.e. a rectangle in (s, t).
struct ScoreField {
    Point gamma;
    i64 s_lo = 0, s_hi = -1, t_lo = 0, t_hi = -1;  // inclusive
    std::vector<std::int64_t> vals;  // vals[(s-s_lo)*(t_hi-t_lo+1) + (t-t_lo)]

    i64 t_span() const { return t_hi - t_lo + 1; }
    i64 s_span() const { return s_hi - s_lo + 1; }
    std::int64_t at(i64 s, i64 t) const {
        if (s < s_lo || s > s_hi || t < t_lo || t > t_hi) return 0;
        return vals[(size_t)((s - s_lo) * t_span() + (t - t_lo))];
    }
};

// In place: vals[s][t] becomes sum over s' >= s, t' >= t of the old values,
// i.e. the sum of the score over the angle set anchored at (s, t).
void angle_prefix_dp(ScoreField& field);

// sum over S of Ham(P+q, S) for every offset q in [n-m+1]^2, where the
// given strings are disjoint monochromatic subtile strings inside [n]^2.
std::vector<std::int64_t> sparse_distances(const PatternPieces& pieces,
                                           const std::vector<TileStr>& strs,
                                           i64 n);

}  // namespace m2d
