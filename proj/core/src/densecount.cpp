#include "m2d/densecount.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "m2d/convolve.hpp"

namespace m2d {

QuarterSplit split_quarters(const Sparse2D& f, i64 n) {
    QuarterSplit qs;
    for (const auto& e : f.entries) {
        // strict comparisons against z = (n-1)/2 via doubled coordinates
        bool right = 2 * e.first.x > n - 1;
        bool high = 2 * e.first.y > n - 1;
        (right ? (high ? qs.f1 : qs.f4) : (high ? qs.f2 : qs.f3)).entries.push_back(e);
    }
    return qs;
}

StripSet strip_partition(const Sparse2D& f1, const ActiveText& at, i64 d) {
    if (d < 1) fail("RangeError: strip width must be positive");
    StripSet out;
    if (f1.empty()) return out;
    // sampled peripherality check
    for (size_t i = 0; i < f1.entries.size(); i += std::max<size_t>(1, f1.entries.size() / 16))
        if (border_distance_sq(at, f1.entries[i].first) > d * d)
            fail("NotPeripheral: strip_partition input exceeds the bound");
    std::map<i64, Sparse2D> bands;
    for (const auto& e : f1.entries) bands[floor_div(e.first.x, d)].entries.push_back(e);
    for (auto& [band, pts] : bands) {
        StripSet::Strip st;
        st.x_lo = band * d;
        i64 min_y = pts.entries.front().first.y;
        i64 top = -1;
        for (const auto& e : pts.entries) {
            min_y = std::min(min_y, e.first.y);
            top = std::max(top, at.topmost[(size_t)e.first.x]);
        }
        st.h = top - min_y + 1;
        st.pts = std::move(pts);
        out.sum_h += st.h;
        out.strips.push_back(std::move(st));
    }
    return out;
}

namespace {

Grid2D subgrid(const Grid2D& g, i64 x0, i64 x1, i64 y0, i64 y1) {  // inclusive
    Grid2D out(x1 - x0 + 1, y1 - y0 + 1, 0, {x0, y0});
    for (i64 x = x0; x <= x1; ++x)
        for (i64 y = y0; y <= y1; ++y) out.at({x, y}) = g.at({x, y});
    return out;
}

// Accumulate Ham(H+q, V) into acc for every in-range offset q.
void add_pair_distances(const Grid2D& h, const Sparse2D& v,
                        std::vector<std::int64_t>& acc, i64 side) {
    if (v.empty() || h.size() == 0) return;
    Grid2D vg = to_grid(v, h.width - 1, h.height - 1);
    DistMap dm = hamming_per_char_2d(h, vg);
    for (i64 dy = 0; dy < dm.h; ++dy)
        for (i64 dx = 0; dx < dm.w; ++dx) {
            Point q = dm.base + Point{dx, dy};
            if (q.x >= 0 && q.x < side && q.y >= 0 && q.y < side)
                acc[(size_t)(q.y * side + q.x)] += dm.at(q);
        }
}

// Distances against a scattered one-cell-per-point string by per-character
// mask correlations inside the window frame: the number of overlapped points
// minus the per-character matches.
std::vector<std::int64_t> scattered_by_correlation(const Grid2D& p,
                                                   const Sparse2D& f, i64 n) {
    i64 m = p.width, side = n - m + 1;
    std::set<Symbol> chars;
    for (const auto& e : f.entries) chars.insert(e.second);
    // text-frame masks with a zero tail for the rightmost alignments
    auto lin_mask = [&](auto&& pred) {
        std::vector<std::uint32_t> mask((size_t)(n * n + (n - m)), 0);
        for (const auto& e : f.entries)
            if (pred(e.second)) mask[(size_t)(e.first.x * n + e.first.y)] = 1;
        return mask;
    };
    auto pat_mask = [&](auto&& pred) {
        std::vector<std::uint32_t> mask((size_t)(m * n), 0);
        for (i64 x = 0; x < m; ++x)
            for (i64 y = 0; y < m; ++y)
                if (pred(p.at({x, y}))) mask[(size_t)(x * n + y)] = 1;
        return mask;
    };
    auto acc = correlate_counts(lin_mask([](Symbol c) { return c != kWildcard; }),
                                pat_mask([](Symbol c) { return c != kWildcard; }));
    for (Symbol c : chars) {
        auto match = correlate_counts(lin_mask([&](Symbol s) { return s == c; }),
                                      pat_mask([&](Symbol s) { return s == c; }));
        for (size_t i = 0; i < acc.size(); ++i) acc[i] -= match[i];
    }
    std::vector<std::int64_t> out((size_t)(side * side));
    for (i64 qy = 0; qy < side; ++qy)
        for (i64 qx = 0; qx < side; ++qx)
            out[(size_t)(qy * side + qx)] = acc[(size_t)(qx * n + qy)];
    return out;
}

// Replace pattern characters absent from the given string by a fresh symbol.
Grid2D collapse_pattern(const Grid2D& p, const Sparse2D& f) {
    std::set<Symbol> present;
    for (const auto& e : f.entries) present.insert(e.second);
    Symbol fresh = 0;
    for (Symbol c : p.cells)
        if (c != kWildcard) fresh = std::max(fresh, c + 1);
    for (const auto& e : f.entries) fresh = std::max(fresh, e.second + 1);
    Grid2D out = p;
    for (Symbol& c : out.cells)
        if (c != kWildcard && !present.count(c)) c = fresh;
    return out;
}

}  // namespace

std::vector<std::int64_t> sigma_border(const Grid2D& p, const Sparse2D& f1pp,
                                       const ActiveText& at, i64 d) {
    if (!p.is_origin_square()) fail("BadShape: sigma_border expects a square pattern");
    i64 m = p.width, n = at.n, side = n - m + 1;
    std::vector<std::int64_t> acc((size_t)(side * side), 0);
    if (f1pp.empty()) return acc;
    Grid2D pc = collapse_pattern(p, f1pp);

    if (4 * d > m) {
        // wide periphery: one full convolution against the inscribed string
        Grid2D fg = to_grid(f1pp, m - 1, m - 1);
        DistMap dm = hamming_per_char_2d(pc, fg);
        for (i64 dy = 0; dy < dm.h; ++dy)
            for (i64 dx = 0; dx < dm.w; ++dx) {
                Point q = dm.base + Point{dx, dy};
                if (q.x >= 0 && q.x < side && q.y >= 0 && q.y < side)
                    acc[(size_t)(q.y * side + q.x)] += dm.at(q);
            }
        return acc;
    }

    // vertical strips against the pattern's right band P2 = [m-d, m) x [0, m-d)
    StripSet vs = strip_partition(f1pp, at, d);
    for (const auto& st : vs.strips) {
        if (st.h > d) {
            i64 y_lo = std::max<i64>(0, m - st.h);
            Grid2D hi = subgrid(pc, m - d, m - 1, y_lo, m - d - 1);
            add_pair_distances(hi, st.pts, acc, side);
        }
    }
    // horizontal strips against the top band P3 = [0, m) x [m-d, m)
    std::map<i64, Sparse2D> bands;
    for (const auto& e : f1pp.entries) bands[floor_div(e.first.y, d)].entries.push_back(e);
    for (auto& [band, pts] : bands) {
        i64 min_x = pts.entries.front().first.x;
        i64 rightm = -1;
        for (const auto& e : pts.entries) {
            min_x = std::min(min_x, e.first.x);
            rightm = std::max(rightm, at.rightmost[(size_t)e.first.y]);
        }
        i64 w = rightm - min_x + 1;
        // unlike the right band, the top band spans the full width, so its
        // high part is nonempty for every positive width bound
        i64 x_lo = std::max<i64>(0, m - w);
        Grid2D hi = subgrid(pc, x_lo, m - 1, m - d, m - 1);
        Sparse2D sorted = pts;
        sorted.sort_entries();
        add_pair_distances(hi, sorted, acc, side);
    }
    return acc;
}

std::vector<std::int64_t> dense_distances(const Grid2D& p, const Sparse2D& f,
                                          const ActiveText& at, i64 d,
                                          const PatternPieces& pieces, i64 k) {
    if (!p.is_origin_square()) fail("BadShape: dense_distances expects a square pattern");
    i64 m = p.width, n = at.n, side = n - m + 1;
    std::vector<std::int64_t> acc((size_t)(side * side), 0);
    if (f.empty()) return acc;

    auto frequent = [&](Symbol a) {
        auto it = pieces.by_char.find(a);
        i64 cnt = it == pieces.by_char.end() ? 0 : (i64)it->second.size();
        return cnt * cnt >= k;
    };

    // infrequent characters: one singleton subtile string per cell
    Sparse2D infreq_part, freq_part;
    std::int64_t single_boxes = 0;
    for (const auto& e : f.entries) {
        if (frequent(e.second)) {
            freq_part.entries.push_back(e);
        } else {
            infreq_part.entries.push_back(e);
            auto it = pieces.by_char.find(e.second);
            if (it != pieces.by_char.end()) single_boxes += (i64)it->second.size();
        }
    }
    if (!infreq_part.empty()) {
        std::vector<std::int64_t> part;
        if (single_boxes <= (1 << 14)) {
            std::vector<TileStr> singles;
            singles.reserve(infreq_part.entries.size());
            for (const auto& e : infreq_part.entries) {
                TileStr s;
                s.sig.phi0 = s.sig.phi1 = pieces.lat.cross_phi(e.first);
                s.sig.psi0 = s.sig.psi1 = pieces.lat.cross_psi(e.first);
                s.sig.has_gamma = true;
                s.sig.gamma = reduce_point(pieces.lat, e.first);
                s.str.entries.push_back(e);
                s.chr = e.second;
                singles.push_back(std::move(s));
            }
            part = sparse_distances(pieces, singles, n);
        } else {
            // large batches go through per-character correlations instead of
            // rasterizing one shifted pattern box per (cell, piece) pair
            part = scattered_by_correlation(p, infreq_part, n);
        }
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
    }
    if (freq_part.empty()) return acc;

    QuarterSplit qs = split_quarters(freq_part, n);
    struct Frame {
        const Sparse2D* part;
        bool rx, ry;
    } frames[4] = {{&qs.f1, false, false},
                   {&qs.f2, true, false},
                   {&qs.f3, true, true},
                   {&qs.f4, false, true}};
    for (const Frame& fr : frames) {
        if (fr.part->empty()) continue;
        ActiveText ref = at;
        if (fr.rx) ref = reflect_x(ref);
        if (fr.ry) ref = reflect_y(ref);
        Grid2D pr = p;
        if (fr.rx || fr.ry) {
            pr = Grid2D(m, m);
            for (i64 x = 0; x < m; ++x)
                for (i64 y = 0; y < m; ++y)
                    pr.at({x, y}) =
                        p.at({fr.rx ? m - 1 - x : x, fr.ry ? m - 1 - y : y});
        }
        Sparse2D fp;
        for (const auto& e : fr.part->entries)
            fp.entries.push_back({{fr.rx ? n - 1 - e.first.x : e.first.x,
                                   fr.ry ? n - 1 - e.first.y : e.first.y},
                                  e.second});
        fp.sort_entries();
        auto part = sigma_border(pr, fp, ref, d);
        for (i64 qy = 0; qy < side; ++qy)
            for (i64 qx = 0; qx < side; ++qx) {
                i64 ox = fr.rx ? side - 1 - qx : qx;
                i64 oy = fr.ry ? side - 1 - qy : qy;
                acc[(size_t)(oy * side + ox)] += part[(size_t)(qy * side + qx)];
            }
    }
    return acc;
}

}  // namespace m2d
