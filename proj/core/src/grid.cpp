#include "m2d/grid.hpp"

#include <cassert>

namespace m2d {

Sparse2D to_sparse(const Grid2D& g) {
    Sparse2D s;
    s.entries.reserve((size_t)g.size());
    for (i64 x = g.origin.x; x < g.origin.x + g.width; ++x)
        for (i64 y = g.origin.y; y < g.origin.y + g.height; ++y)
            s.entries.push_back({{x, y}, g.at({x, y})});
    return s;
}

Grid2D to_grid(const Sparse2D& s, i64 margin_x, i64 margin_y) {
    if (s.empty()) fail("EmptyString: to_grid of empty sparse string");
    i64 x0 = s.entries.front().first.x, x1 = x0, y0 = s.entries.front().first.y, y1 = y0;
    for (const auto& [p, c] : s.entries) {
        x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
    }
    Grid2D g(x1 - x0 + 1 + 2 * margin_x, y1 - y0 + 1 + 2 * margin_y, kWildcard,
             {x0 - margin_x, y0 - margin_y});
    for (const auto& [p, c] : s.entries) g.at(p) = c;
    return g;
}

Grid2D shift(const Grid2D& s, Point u) {
    Grid2D r = s;
    r.origin = s.origin + u;
    return r;
}

Sparse2D shift(const Sparse2D& s, Point u) {
    Sparse2D r = s;
    for (auto& [p, c] : r.entries) p = p + u;
    return r;
}

static bool symbols_match(Symbol a, Symbol b) {
    return a == b || a == kWildcard || b == kWildcard;
}

HamResult hamming_oracle(const Grid2D& s, const Grid2D& r) {
    HamResult out;
    i64 x0 = std::max(s.origin.x, r.origin.x);
    i64 x1 = std::min(s.origin.x + s.width, r.origin.x + r.width);
    i64 y0 = std::max(s.origin.y, r.origin.y);
    i64 y1 = std::min(s.origin.y + s.height, r.origin.y + r.height);
    for (i64 x = x0; x < x1; ++x)
        for (i64 y = y0; y < y1; ++y)
            if (!symbols_match(s.at({x, y}), r.at({x, y}))) {
                ++out.count;
                out.mismatches.push_back({x, y});
            }
    std::sort(out.mismatches.begin(), out.mismatches.end());
    return out;
}

HamResult hamming_oracle(const Sparse2D& s, const Sparse2D& r) {
    HamResult out;
    auto it = r.entries.begin();
    for (const auto& [p, c] : s.entries) {
        while (it != r.entries.end() && it->first < p) ++it;
        if (it != r.entries.end() && it->first == p && !symbols_match(c, it->second)) {
            ++out.count;
            out.mismatches.push_back(p);
        }
    }
    return out;
}

HamResult hamming_oracle(const Grid2D& s, const Sparse2D& r) {
    HamResult out;
    for (const auto& [p, c] : r.entries)
        if (s.contains(p) && !symbols_match(s.at(p), c)) {
            ++out.count;
            out.mismatches.push_back(p);
        }
    return out;
}

OffsetCounts oracle_all_offsets(const Grid2D& p, const Grid2D& t, i64 k) {
    if (!p.is_origin_square() || !t.is_origin_square() || p.width > t.width)
        fail("BadShape: oracle_all_offsets requires origin squares with m <= n");
    i64 m = p.width, n = t.width;
    OffsetCounts out(n, m);
    for (i64 qy = 0; qy + m <= n; ++qy)
        for (i64 qx = 0; qx + m <= n; ++qx) {
            i64 d = 0;
            for (i64 x = 0; x < m && d <= k; ++x)
                for (i64 y = 0; y < m; ++y)
                    if (!symbols_match(p.at({x, y}), t.at({qx + x, qy + y}))) ++d;
            out.at(qx, qy) = std::min(d, k + 1);
        }
    return out;
}

Lin1D linearize(const Grid2D& s) {
    if (s.size() == 0) fail("EmptyString: linearize of empty string");
    Lin1D lin;
    lin.height = s.height;
    lin.symbols.resize((size_t)(s.width * s.height));
    for (i64 x = 0; x < s.width; ++x)
        for (i64 y = 0; y < s.height; ++y)
            lin.symbols[(size_t)(x * s.height + y)] =
                s.at({s.origin.x + x, s.origin.y + y});
    return lin;
}

Lin1D linearize(const Sparse2D& s) { return linearize(to_grid(s)); }

PadEmbed pad_embed(const Grid2D& p, const Grid2D& t) {
    if (p.size() == 0 || t.size() == 0) fail("EmptyString: pad_embed");
    PadEmbed pe;
    // P is inscribed into its rectangle and extended to the text's height
    // with wildcard rows, so consecutive pattern columns sit at stride h_T
    // and a contiguous window of the text's linearisation aligns cell by
    // cell with the pattern's.
    Grid2D pp(p.width, t.height, kWildcard, p.origin);
    for (i64 x = 0; x < p.width; ++x)
        for (i64 y = 0; y < p.height; ++y)
            pp.at({p.origin.x + x, p.origin.y + y}) = p.at({p.origin.x + x, p.origin.y + y});
    pe.lin_p = linearize(pp);
    pe.lin_t = linearize(t);
    pe.base = t.origin - p.origin;
    pe.offs_w = t.width - p.width + 1;
    pe.offs_h = t.height - p.height + 1;
    // The pad rows of the last pattern column read past the end; a wildcard
    // tail keeps every window in range without affecting distances.
    i64 need = (pe.offs_w - 1) * t.height + (pe.offs_h - 1) + pe.lin_p.size();
    if (need > pe.lin_t.size()) pe.lin_t.symbols.resize((size_t)need, kWildcard);
    return pe;
}

}  // namespace m2d
