#include "m2d/sparsecount.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "m2d/convolve.hpp"
#include "m2d/metrics.hpp"

namespace m2d {

PatternPieces build_pattern_pieces(const Lattice& lat, std::vector<TileStr> pieces,
                                   i64 m) {
    PatternPieces pp;
    pp.lat = lat;
    pp.m = m;
    pp.pieces = std::move(pieces);
    for (size_t i = 0; i < pp.pieces.size(); ++i)
        pp.by_char[pp.pieces[i].chr].push_back(i);
    return pp;
}

CornerDecomp corner_decompose(const Lattice& lat, const TruncSig& sig) {
    if (!sig.has_gamma) fail("MissingSignature: corner_decompose needs gamma");
    if (sig.xy_truncated())
        fail("TruncatedInput: corner_decompose handles plain subtiles only");
    CornerDecomp cd;
    i64 det = lat.det;
    i64 cs = lat.cross_psi(sig.gamma), cp = lat.cross_phi(sig.gamma);
    cd.s0 = ceil_div(cs - sig.psi1, det);
    cd.s1 = floor_div(cs - sig.psi0, det) + 1;
    cd.t0 = ceil_div(sig.phi0 - cp, det);
    cd.t1 = floor_div(sig.phi1 - cp, det) + 1;
    if (cd.s0 >= cd.s1 || cd.t0 >= cd.t1) {
        cd.empty = true;
        cd.w = {{{sig.gamma, sig.gamma}, {sig.gamma, sig.gamma}}};
        return cd;
    }
    i64 ss[2] = {cd.s0, cd.s1}, tt[2] = {cd.t0, cd.t1};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            cd.w[(size_t)i][(size_t)j] = ss[i] * lat.phi + tt[j] * lat.psi + sig.gamma;
    return cd;
}

namespace {

struct StBox {
    i64 s0, s1, t0, t1;  // half open in lattice coordinates
    i64 x0, x1, y0, y1;  // inclusive axis bounds (clamped sentinels)
};

// box constraints relative to the class base point
StBox to_stbox(const Lattice& lat, const TruncSig& sig, Point base) {
    StBox b;
    i64 det = lat.det;
    i64 cs = lat.cross_psi(sig.gamma), cp = lat.cross_phi(sig.gamma);
    b.s0 = ceil_div(cs - sig.psi1, det);
    b.s1 = floor_div(cs - sig.psi0, det) + 1;
    b.t0 = ceil_div(sig.phi0 - cp, det);
    b.t1 = floor_div(sig.phi1 - cp, det) + 1;
    auto [ds, dt] = lattice_coords(lat, sig.gamma, base);
    b.s0 += ds; b.s1 += ds;
    b.t0 += dt; b.t1 += dt;
    b.x0 = sig.x0; b.x1 = sig.x1; b.y0 = sig.y0; b.y1 = sig.y1;
    return b;
}

// valid s interval of one t-row under the axis bounds; returns false if empty
bool row_interval(const Lattice& lat, const StBox& b, Point base, i64 t, i64& lo,
                  i64& hi) {
    lo = b.s0;
    hi = b.s1 - 1;
    i64 cx = t * lat.psi.x + base.x;  // x = s*phi.x + cx
    if (lat.phi.x == 0) {
        if (cx < b.x0 || cx > b.x1) return false;
    } else {
        if (b.x0 != kNegInf) lo = std::max(lo, ceil_div(b.x0 - cx, lat.phi.x));
        if (b.x1 != kPosInf) hi = std::min(hi, floor_div(b.x1 - cx, lat.phi.x));
    }
    i64 cy = t * lat.psi.y + base.y;  // y = s*phi.y + cy, phi.y < 0
    if (b.y1 != kPosInf) lo = std::max(lo, ceil_div(b.y1 - cy, lat.phi.y));
    if (b.y0 != kNegInf) hi = std::min(hi, floor_div(b.y0 - cy, lat.phi.y));
    return lo <= hi;
}

}  // namespace

std::vector<std::int64_t> count_boxes_containing(const Lattice& lat,
                                                 const std::vector<TruncSig>& boxes,
                                                 const std::vector<Point>& points) {
    std::vector<std::int64_t> out(points.size(), 0);
    if (boxes.empty() || points.empty()) return out;
    Point base = reduce_point(lat, boxes.front().gamma);
    for (const TruncSig& b : boxes) {
        if (!b.has_gamma) fail("MissingSignature: box without gamma");
        if (reduce_point(lat, b.gamma) != base)
            fail("MixedClasses: boxes of differing congruence classes");
    }
    std::vector<StBox> st;
    st.reserve(boxes.size());
    for (const TruncSig& b : boxes) st.push_back(to_stbox(lat, b, base));

    if ((u64)boxes.size() * points.size() <= (1u << 16)) {
        for (size_t pi = 0; pi < points.size(); ++pi) {
            Point p = points[pi];
            auto [s, t] = lattice_coords(lat, p, base);
            for (const StBox& b : st) {
                Metrics::get().box_ops++;
                if (s >= b.s0 && s < b.s1 && t >= b.t0 && t < b.t1 && p.x >= b.x0 &&
                    p.x <= b.x1 && p.y >= b.y0 && p.y <= b.y1)
                    out[pi]++;
            }
        }
        return out;
    }

    // offline: group points by t-row, rasterize each box as one s-interval
    // per row into a difference array over the row-sorted point order
    struct Pt { i64 s, t; size_t idx; };
    std::vector<Pt> ps(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        auto [s, t] = lattice_coords(lat, points[i], base);
        ps[i] = {s, t, i};
    }
    std::sort(ps.begin(), ps.end(), [](const Pt& a, const Pt& b) {
        return a.t != b.t ? a.t < b.t : a.s < b.s;
    });
    std::vector<i64> row_t;      // distinct t values
    std::vector<size_t> row_begin;  // start index of each row in ps
    for (size_t i = 0; i < ps.size(); ++i)
        if (i == 0 || ps[i].t != ps[i - 1].t) {
            row_t.push_back(ps[i].t);
            row_begin.push_back(i);
        }
    row_begin.push_back(ps.size());

    std::vector<std::int64_t> diff(ps.size() + 1, 0);
    for (const StBox& b : st) {
        auto r0 = std::lower_bound(row_t.begin(), row_t.end(), b.t0) - row_t.begin();
        auto r1 = std::lower_bound(row_t.begin(), row_t.end(), b.t1) - row_t.begin();
        for (auto r = r0; r < r1; ++r) {
            Metrics::get().box_ops++;
            i64 lo, hi;
            if (!row_interval(lat, b, base, row_t[(size_t)r], lo, hi)) continue;
            size_t beg = row_begin[(size_t)r], end = row_begin[(size_t)r + 1];
            auto cmp = [](const Pt& a, i64 s) { return a.s < s; };
            size_t ilo = (size_t)(std::lower_bound(ps.begin() + (ptrdiff_t)beg,
                                                   ps.begin() + (ptrdiff_t)end, lo, cmp) -
                                  ps.begin());
            size_t ihi = (size_t)(std::lower_bound(ps.begin() + (ptrdiff_t)beg,
                                                   ps.begin() + (ptrdiff_t)end, hi + 1,
                                                   cmp) -
                                  ps.begin());
            diff[ilo]++;
            diff[ihi]--;
        }
    }
    std::int64_t run = 0;
    for (size_t i = 0; i < ps.size(); ++i) {
        run += diff[i];
        out[ps[i].idx] = run;
    }
    return out;
}

void angle_prefix_dp(ScoreField& field) {
    i64 ts = field.t_span(), ss = field.s_span();
    Metrics::get().dp_cells += (u64)(ts * ss);
    auto& v = field.vals;
    for (i64 s = ss - 1; s >= 0; --s)
        for (i64 t = ts - 1; t >= 0; --t) {
            std::int64_t acc = v[(size_t)(s * ts + t)];
            if (s + 1 < ss) acc += v[(size_t)((s + 1) * ts + t)];
            if (t + 1 < ts) acc += v[(size_t)(s * ts + t + 1)];
            if (s + 1 < ss && t + 1 < ts) acc -= v[(size_t)((s + 1) * ts + t + 1)];
            v[(size_t)(s * ts + t)] = acc;
        }
}

namespace {

// first term of the mismatch identity: |dom(P+q) ∩ U| for all offsets;
// the zero tail keeps the rightmost mapped alignments in range
std::vector<std::int64_t> overlap_counts(const std::vector<TileStr>& strs, i64 n,
                                         i64 m) {
    std::vector<std::uint32_t> tmask((size_t)(n * n + (n - m)), 0);
    for (const TileStr& s : strs)
        for (const auto& [p, c] : s.str.entries)
            tmask[(size_t)(p.x * n + p.y)] = 1;
    std::vector<std::uint32_t> pmask((size_t)(m * n), 0);
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y) pmask[(size_t)(x * n + y)] = 1;
    auto corr = correlate_counts(tmask, pmask);
    i64 side = n - m + 1;
    std::vector<std::int64_t> out((size_t)(side * side));
    for (i64 qx = 0; qx < side; ++qx)
        for (i64 qy = 0; qy < side; ++qy)
            out[(size_t)(qy * side + qx)] = corr[(size_t)(qx * n + qy)];
    return out;
}

}  // namespace

std::vector<std::int64_t> sparse_distances(const PatternPieces& pieces,
                                           const std::vector<TileStr>& strs,
                                           i64 n) {
    const Lattice& lat = pieces.lat;
    i64 m = pieces.m;
    i64 side = n - m + 1;
    std::vector<std::int64_t> result((size_t)(side * side), 0);
    if (strs.empty()) return result;

    {
        // domains must be pairwise disjoint
        std::vector<Point> all;
        for (const TileStr& s : strs)
            for (const auto& e : s.str.entries) all.push_back(e.first);
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            fail("OverlapError: subtile string domains intersect");
    }

    result = overlap_counts(strs, n, m);

    // class and lattice coordinates of -q for every offset
    std::vector<std::pair<i64, i64>> qst((size_t)(side * side));
    std::map<Point, std::vector<size_t>> q_by_class;
    for (i64 qy = 0; qy < side; ++qy)
        for (i64 qx = 0; qx < side; ++qx) {
            Point mq{-qx, -qy};
            BasisDecomp d = decompose_basis(lat, mq);
            size_t qi = (size_t)(qy * side + qx);
            q_by_class[d.gamma].push_back(qi);
            qst[qi] = lattice_coords(lat, mq, d.gamma);
        }

    // corner anchors per subtile string
    std::vector<CornerDecomp> corners;
    corners.reserve(strs.size());
    for (const TileStr& s : strs) corners.push_back(corner_decompose(lat, s.sig));

    for (int ci = 0; ci < 2; ++ci)
        for (int cj = 0; cj < 2; ++cj) {
            int sign = ((ci + cj) & 1) ? -1 : 1;
            // boxes V - w_{ci,cj}(S) grouped by congruence class
            std::map<Point, std::vector<TruncSig>> by_class;
            for (size_t si = 0; si < strs.size(); ++si) {
                Point w = corners[si].w[(size_t)ci][(size_t)cj];
                auto it = pieces.by_char.find(strs[si].chr);
                if (it == pieces.by_char.end()) continue;
                for (size_t vi : it->second) {
                    TruncSig sig = pieces.pieces[vi].sig;
                    // shift by -w: axis bounds move, cross ranges move by the
                    // cross values of w, the class moves to gamma - w
                    if (sig.x0 != kNegInf) sig.x0 -= w.x;
                    if (sig.x1 != kPosInf) sig.x1 -= w.x;
                    if (sig.y0 != kNegInf) sig.y0 -= w.y;
                    if (sig.y1 != kPosInf) sig.y1 -= w.y;
                    sig.phi0 -= lat.cross_phi(w);
                    sig.phi1 -= lat.cross_phi(w);
                    sig.psi0 -= lat.cross_psi(w);
                    sig.psi1 -= lat.cross_psi(w);
                    sig.gamma = sig.gamma - w;
                    by_class[reduce_point(lat, sig.gamma)].push_back(sig);
                }
            }
            for (auto& [gamma, boxes] : by_class) {
                // field bounds: box ranges united with the queried offsets
                ScoreField f;
                f.gamma = gamma;
                bool any = false;
                auto grow = [&](i64 s0, i64 s1, i64 t0, i64 t1) {
                    if (!any) {
                        f.s_lo = s0; f.s_hi = s1; f.t_lo = t0; f.t_hi = t1;
                        any = true;
                    } else {
                        f.s_lo = std::min(f.s_lo, s0); f.s_hi = std::max(f.s_hi, s1);
                        f.t_lo = std::min(f.t_lo, t0); f.t_hi = std::max(f.t_hi, t1);
                    }
                };
                for (const TruncSig& b : boxes) {
                    StBox sb = to_stbox(lat, b, gamma);
                    if (sb.s0 >= sb.s1 || sb.t0 >= sb.t1) continue;
                    grow(sb.s0, sb.s1 - 1, sb.t0, sb.t1 - 1);
                }
                if (!any) continue;
                auto qit = q_by_class.find(gamma);
                if (qit != q_by_class.end())
                    for (size_t qi : qit->second)
                        grow(qst[qi].first, qst[qi].first, qst[qi].second,
                             qst[qi].second);
                // score per field cell via the box-counting backend
                std::vector<Point> pts;
                pts.reserve((size_t)(f.s_span() * f.t_span()));
                for (i64 s = f.s_lo; s <= f.s_hi; ++s)
                    for (i64 t = f.t_lo; t <= f.t_hi; ++t)
                        pts.push_back(s * lat.phi + t * lat.psi + gamma);
                auto counts = count_boxes_containing(lat, boxes, pts);
                f.vals.assign(counts.begin(), counts.end());
                angle_prefix_dp(f);
                if (qit != q_by_class.end())
                    for (size_t qi : qit->second)
                        result[qi] -= sign * f.at(qst[qi].first, qst[qi].second);
            }
        }
    return result;
}

}  // namespace m2d
