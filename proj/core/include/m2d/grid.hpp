#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "m2d/error.hpp"
#include "m2d/geom.hpp"

namespace m2d {

using Symbol = std::int32_t;

// Reserved maximal symbol; matches every character.
constexpr Symbol kWildcard = std::numeric_limits<Symbol>::max();

// Dense rectangular 2D string. Domain is
// [origin.x, origin.x+width) x [origin.y, origin.y+height).
struct Grid2D {
    Point origin{0, 0};
    i64 width = 0;
    i64 height = 0;
    std::vector<Symbol> cells;  // cells[(y-origin.y)*width + (x-origin.x)]

    Grid2D() = default;
    Grid2D(i64 w, i64 h, Symbol fill = 0, Point org = {0, 0})
        : origin(org), width(w), height(h), cells((size_t)(w * h), fill) {}

    bool contains(Point p) const {
        return p.x >= origin.x && p.x < origin.x + width && p.y >= origin.y &&
               p.y < origin.y + height;
    }
    Symbol at(Point p) const {
        return cells[(size_t)((p.y - origin.y) * width + (p.x - origin.x))];
    }
    Symbol& at(Point p) {
        return cells[(size_t)((p.y - origin.y) * width + (p.x - origin.x))];
    }
    i64 size() const { return width * height; }
    bool is_origin_square() const {
        return origin == Point{0, 0} && width == height && width > 0;
    }
};

// 2D string stored as a sorted association Point -> symbol.
struct Sparse2D {
    std::vector<std::pair<Point, Symbol>> entries;  // sorted lex by (x, y)

    i64 size() const { return (i64)entries.size(); }
    bool empty() const { return entries.empty(); }

    void sort_entries() {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    std::optional<Symbol> find(Point p) const {
        auto it = std::lower_bound(
            entries.begin(), entries.end(), p,
            [](const auto& e, Point q) { return e.first < q; });
        if (it != entries.end() && it->first == p) return it->second;
        return std::nullopt;
    }
};

Sparse2D to_sparse(const Grid2D& g);

// Inscribes S into its bounding rectangle, extended by the given margins;
// undefined positions become wildcards.
Grid2D to_grid(const Sparse2D& s, i64 margin_x = 0, i64 margin_y = 0);

// Linearisation: symbols[x*height + y], column by column.
struct Lin1D {
    std::vector<Symbol> symbols;
    i64 height = 0;
    i64 size() const { return (i64)symbols.size(); }
};

Grid2D shift(const Grid2D& s, Point u);
Sparse2D shift(const Sparse2D& s, Point u);

struct HamResult {
    i64 count = 0;
    std::vector<Point> mismatches;  // MI(S, R), sorted
};

HamResult hamming_oracle(const Grid2D& s, const Grid2D& r);
HamResult hamming_oracle(const Sparse2D& s, const Sparse2D& r);
HamResult hamming_oracle(const Grid2D& s, const Sparse2D& r);
inline HamResult hamming_oracle(const Sparse2D& s, const Grid2D& r) {
    return hamming_oracle(r, s);
}

// Pipeline output: value per offset q in [n-m+1]^2.
struct OffsetCounts {
    i64 n = 0;
    i64 m = 0;
    std::vector<std::int64_t> counts;  // counts[qy*(n-m+1)+qx]

    OffsetCounts() = default;
    OffsetCounts(i64 n_, i64 m_)
        : n(n_), m(m_), counts((size_t)((n_ - m_ + 1) * (n_ - m_ + 1)), 0) {}
    i64 side() const { return n - m + 1; }
    std::int64_t& at(i64 qx, i64 qy) { return counts[(size_t)(qy * side() + qx)]; }
    std::int64_t at(i64 qx, i64 qy) const { return counts[(size_t)(qy * side() + qx)]; }
    friend bool operator==(const OffsetCounts& a, const OffsetCounts& b) {
        return a.n == b.n && a.m == b.m && a.counts == b.counts;
    }
};

// General offset -> value association over a rectangular offset range.
struct DistMap {
    Point base{0, 0};  // smallest valid offset
    i64 w = 0, h = 0;  // valid offsets are base + [0,w) x [0,h)
    std::vector<std::int64_t> v;

    bool valid(Point q) const {
        return q.x >= base.x && q.x < base.x + w && q.y >= base.y && q.y < base.y + h;
    }
    std::int64_t& at(Point q) {
        return v[(size_t)((q.y - base.y) * w + (q.x - base.x))];
    }
    std::int64_t at(Point q) const {
        return v[(size_t)((q.y - base.y) * w + (q.x - base.x))];
    }
};

// min(k+1, Ham(T, P+q)) for every q in [n-m+1]^2, by direct counting.
// This is the reference oracle used throughout the tests.
OffsetCounts oracle_all_offsets(const Grid2D& p, const Grid2D& t, i64 k);

Lin1D linearize(const Grid2D& s);
Lin1D linearize(const Sparse2D& s);

// Embedding of the 2D text-to-pattern distance problem into one dimension.
// lin_t is padded with trailing wildcards so that every mapped offset's
// window stays in range.
struct PadEmbed {
    Lin1D lin_p;       // size w_t * h_p
    Lin1D lin_t;       // size w_t * h_t plus wildcard tail
    Point base;        // 2D offset mapped to 1D offset 0
    i64 offs_w = 0;    // valid offsets: base + [0, offs_w) x [0, offs_h)
    i64 offs_h = 0;
    i64 to_1d(Point q) const {
        return (q.x - base.x) * lin_t.height + (q.y - base.y);
    }
};

PadEmbed pad_embed(const Grid2D& p, const Grid2D& t);

}  // namespace m2d
