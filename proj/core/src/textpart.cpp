#include "m2d/textpart.hpp"

#include <algorithm>
#include <cassert>

namespace m2d {

i64 ActiveText::active_in(i64 x0, i64 x1, i64 y0, i64 y1) const {
    x0 = std::max<i64>(x0, 0); y0 = std::max<i64>(y0, 0);
    x1 = std::min(x1, n); y1 = std::min(y1, n);
    if (x0 >= x1 || y0 >= y1) return 0;
    auto P = [&](i64 x, i64 y) { return prefix[(size_t)(y * (n + 1) + x)]; };
    return P(x1, y1) - P(x0, y1) - P(x1, y0) + P(x0, y0);
}

namespace {

void finish_tables(ActiveText& at) {
    i64 n = at.n;
    at.prefix.assign((size_t)((n + 1) * (n + 1)), 0);
    for (i64 y = 0; y < n; ++y)
        for (i64 x = 0; x < n; ++x)
            at.prefix[(size_t)((y + 1) * (n + 1) + x + 1)] =
                at.prefix[(size_t)(y * (n + 1) + x + 1)] +
                at.prefix[(size_t)((y + 1) * (n + 1) + x)] -
                at.prefix[(size_t)(y * (n + 1) + x)] + at.mask[(size_t)(y * n + x)];
    at.topmost.assign((size_t)n, -1);
    at.bottommost.assign((size_t)n, -1);
    at.leftmost.assign((size_t)n, -1);
    at.rightmost.assign((size_t)n, -1);
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            if (at.mask[(size_t)(y * n + x)]) {
                if (at.bottommost[(size_t)x] < 0) at.bottommost[(size_t)x] = y;
                at.topmost[(size_t)x] = y;
            }
    for (i64 y = 0; y < n; ++y)
        for (i64 x = 0; x < n; ++x)
            if (at.mask[(size_t)(y * n + x)]) {
                if (at.leftmost[(size_t)y] < 0) at.leftmost[(size_t)y] = x;
                at.rightmost[(size_t)y] = x;
            }
    at.ta.entries.clear();
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y)
            if (at.mask[(size_t)(y * n + x)])
                at.ta.entries.push_back({{x, y}, at.text.at({x, y})});
}

}  // namespace

ActiveText active_from_parts(const Grid2D& t, std::vector<std::uint8_t> mask,
                             std::vector<std::uint8_t> qmask, i64 m) {
    ActiveText at;
    at.n = t.width;
    at.m = m;
    at.text = t;
    at.mask = std::move(mask);
    at.qmask = std::move(qmask);
    finish_tables(at);
    return at;
}

ActiveText build_active(const Grid2D& t, const std::vector<Point>& q, i64 m) {
    if (!t.is_origin_square() || m <= 0 || m > t.width)
        fail("BadShape: build_active expects an origin-square text and m <= n");
    i64 n = t.width, side = n - m + 1;
    std::vector<i64> diff((size_t)((n + 1) * (n + 1)), 0);
    std::vector<std::uint8_t> qmask((size_t)(side * side), 0);
    for (Point qq : q) {
        if (qq.x < 0 || qq.y < 0 || qq.x >= side || qq.y >= side)
            fail("OffsetOutOfRange: candidate offset outside [n-m+1]^2");
        qmask[(size_t)(qq.y * side + qq.x)] = 1;
        diff[(size_t)(qq.y * (n + 1) + qq.x)] += 1;
        diff[(size_t)(qq.y * (n + 1) + qq.x + m)] -= 1;
        diff[(size_t)((qq.y + m) * (n + 1) + qq.x)] -= 1;
        diff[(size_t)((qq.y + m) * (n + 1) + qq.x + m)] += 1;
    }
    std::vector<std::uint8_t> mask((size_t)(n * n), 0);
    std::vector<i64> row((size_t)(n + 1), 0);
    std::vector<i64> acc((size_t)(n + 1), 0);
    for (i64 y = 0; y < n; ++y) {
        for (i64 x = 0; x <= n; ++x) acc[(size_t)x] += diff[(size_t)(y * (n + 1) + x)];
        i64 run = 0;
        for (i64 x = 0; x < n; ++x) {
            run += acc[(size_t)x];
            mask[(size_t)(y * n + x)] = run > 0;
        }
        run = 0;
    }
    return active_from_parts(t, std::move(mask), std::move(qmask), m);
}

ActiveText reflect_x(const ActiveText& at) {
    i64 n = at.n, m = at.m, side = n - m + 1;
    Grid2D t(n, n);
    std::vector<std::uint8_t> mask((size_t)(n * n));
    std::vector<std::uint8_t> qmask((size_t)(side * side));
    for (i64 y = 0; y < n; ++y)
        for (i64 x = 0; x < n; ++x) {
            t.at({x, y}) = at.text.at({n - 1 - x, y});
            mask[(size_t)(y * n + x)] = at.mask[(size_t)(y * n + n - 1 - x)];
        }
    for (i64 qy = 0; qy < side; ++qy)
        for (i64 qx = 0; qx < side; ++qx)
            qmask[(size_t)(qy * side + qx)] =
                at.qmask[(size_t)(qy * side + side - 1 - qx)];
    return active_from_parts(t, std::move(mask), std::move(qmask), m);
}

ActiveText reflect_y(const ActiveText& at) {
    i64 n = at.n, m = at.m, side = n - m + 1;
    Grid2D t(n, n);
    std::vector<std::uint8_t> mask((size_t)(n * n));
    std::vector<std::uint8_t> qmask((size_t)(side * side));
    for (i64 y = 0; y < n; ++y)
        for (i64 x = 0; x < n; ++x) {
            t.at({x, y}) = at.text.at({x, n - 1 - y});
            mask[(size_t)(y * n + x)] = at.mask[(size_t)((n - 1 - y) * n + x)];
        }
    for (i64 qy = 0; qy < side; ++qy)
        for (i64 qx = 0; qx < side; ++qx)
            qmask[(size_t)(qy * side + qx)] =
                at.qmask[(size_t)((side - 1 - qy) * side + qx)];
    return active_from_parts(t, std::move(mask), std::move(qmask), m);
}

i64 border_distance_sq(const ActiveText& at, Point u) {
    if (!at.active(u)) return 0;
    i64 best = kPosInf;
    for (i64 r = 1; r <= at.n + 1; ++r) {
        if ((i64)r * r >= best) break;
        for (i64 dx = -r; dx <= r; ++dx)
            for (i64 dy = -r; dy <= r; ++dy) {
                if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
                Point v = u + Point{dx, dy};
                if (!at.active(v)) best = std::min(best, dx * dx + dy * dy);
            }
    }
    return best;
}

std::pair<i64, i64> PGrid::cell_of(Point u) const {
    i64 va = D * lat.cross_phi(u);
    i64 vb = D * lat.cross_psi(u);
    auto ia = std::upper_bound(alpha.begin(), alpha.end(), va) - alpha.begin() - 1;
    auto jb = std::upper_bound(beta.begin(), beta.end(), vb) - beta.begin() - 1;
    assert(ia >= 0 && ia < ell && alpha[(size_t)ia] < va && va < alpha[(size_t)ia + 1]);
    assert(jb >= 0 && jb < ell && beta[(size_t)jb] < vb && vb < beta[(size_t)jb + 1]);
    return {ia, jb};
}

namespace {

// Line offsets avoiding every value in cs (sorted, distinct), scaled by D.
std::vector<i64> line_offsets(const std::vector<i64>& cs, i64 ell, i64 D) {
    i64 g = 1;
    for (size_t i = 1; i < cs.size(); ++i) g = i == 1 ? cs[i] - cs[i - 1] : std::min(g, cs[i] - cs[i - 1]);
    if (cs.size() < 2) g = 1;
    i64 a0 = D * cs.front() - g * ell;
    i64 aL = D * cs.back() + g * ell;
    i64 step = (aL - a0) / ell;  // exact: aL - a0 = 2*ell*(ell*(cN-c1) + g)
    i64 bump = std::min(g * ell, step / 2);
    std::vector<i64> a((size_t)ell + 1);
    for (i64 i = 0; i <= ell; ++i) a[(size_t)i] = a0 + i * step;
    for (i64 i = 1; i < ell; ++i) {
        i64 v = a[(size_t)i];
        if (v % D == 0 && std::binary_search(cs.begin(), cs.end(), v / D))
            a[(size_t)i] = v + bump;
    }
    return a;
}

}  // namespace

PGrid build_pgrid(i64 n, const Lattice& lat, i64 ell) {
    if (ell < 1) fail("RangeError: build_pgrid requires ell >= 1");
    if (n < 1) fail("RangeError: build_pgrid requires n >= 1");
    PGrid pg;
    pg.lat = lat;
    pg.ell = ell;
    pg.n = n;
    pg.D = 2 * ell * ell;
    std::vector<i64> ca, cb;
    ca.reserve((size_t)(n * n));
    cb.reserve((size_t)(n * n));
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) {
            ca.push_back(lat.cross_phi({x, y}));
            cb.push_back(lat.cross_psi({x, y}));
        }
    std::sort(ca.begin(), ca.end());
    ca.erase(std::unique(ca.begin(), ca.end()), ca.end());
    std::sort(cb.begin(), cb.end());
    cb.erase(std::unique(cb.begin(), cb.end()), cb.end());
    pg.alpha = line_offsets(ca, ell, pg.D);
    pg.beta = line_offsets(cb, ell, pg.D);
    return pg;
}

CellTable build_cell_table(const PGrid& pg, const ActiveText& at) {
    CellTable tab;
    tab.ell = pg.ell;
    tab.cells.assign((size_t)(pg.ell * pg.ell), CellStats{});
    for (i64 x = 0; x < pg.n; ++x)
        for (i64 y = 0; y < pg.n; ++y) {
            Point u{x, y};
            auto [i, j] = pg.cell_of(u);
            CellStats& c = tab.at(i, j);
            if (c.cnt == 0) {
                c.min_x = c.max_x = x;
                c.min_y = c.max_y = y;
            } else {
                c.min_x = std::min(c.min_x, x);
                c.max_x = std::max(c.max_x, x);
                c.min_y = std::min(c.min_y, y);
                c.max_y = std::max(c.max_y, y);
            }
            c.cnt++;
            if (at.active(u)) c.act++;
            c.pts.push_back(u);
        }
    return tab;
}

namespace {

struct CellGeo {
    i64 min_x_num, max_x_num, min_y_num, max_y_num;  // over den()
};

CellGeo cell_geo(const PGrid& pg, i64 i, i64 j) {
    i64 xs[4] = {pg.vx_num(i, j), pg.vx_num(i + 1, j), pg.vx_num(i, j + 1),
                 pg.vx_num(i + 1, j + 1)};
    i64 ys[4] = {pg.vy_num(i, j), pg.vy_num(i + 1, j), pg.vy_num(i, j + 1),
                 pg.vy_num(i + 1, j + 1)};
    CellGeo g;
    g.min_x_num = *std::min_element(xs, xs + 4);
    g.max_x_num = *std::max_element(xs, xs + 4);
    g.min_y_num = *std::min_element(ys, ys + 4);
    g.max_y_num = *std::max_element(ys, ys + 4);
    return g;
}

}  // namespace

CellRegion cell_region(const PGrid& pg, i64 i, i64 j) {
    CellGeo g = cell_geo(pg, i, j);
    i64 den = pg.den();
    i128 z2den = (i128)(pg.n - 1) * den;  // 2*z scaled by den
    bool left = (i128)2 * g.max_x_num < z2den;
    bool right = (i128)2 * g.min_x_num > z2den;
    bool low = (i128)2 * g.max_y_num < z2den;
    bool high = (i128)2 * g.min_y_num > z2den;
    if ((left || right) && (low || high)) {
        if (right && high) return CellRegion::K1;
        if (left && high) return CellRegion::K2;
        if (left && low) return CellRegion::K3;
        return CellRegion::K4;
    }
    return CellRegion::Straddle;
}

namespace {

Point quarter_corner(const CellStats& c, int quarter) {
    switch (quarter) {
        case 1: return {c.max_x, c.max_y};
        case 2: return {c.min_x, c.max_y};
        case 3: return {c.min_x, c.min_y};
        default: return {c.max_x, c.min_y};
    }
}

// any candidate placement containing p
bool find_witness(const ActiveText& at, Point p, Point& q_out) {
    i64 side = at.n - at.m + 1;
    for (i64 qy = std::max<i64>(0, p.y - at.m + 1); qy <= std::min(p.y, side - 1); ++qy)
        for (i64 qx = std::max<i64>(0, p.x - at.m + 1); qx <= std::min(p.x, side - 1); ++qx)
            if (at.qmask[(size_t)(qy * side + qx)]) {
                q_out = {qx, qy};
                return true;
            }
    return false;
}

int quarter_for_straddle(const PGrid& pg, i64 i, i64 j) {
    // choose by the cell center; the cell intersects the chosen quarter
    i64 den = pg.den();
    i128 cx4 = (i128)pg.vx_num(i, j) + pg.vx_num(i + 1, j) + pg.vx_num(i, j + 1) +
               pg.vx_num(i + 1, j + 1);
    i128 cy4 = (i128)pg.vy_num(i, j) + pg.vy_num(i + 1, j) + pg.vy_num(i, j + 1) +
               pg.vy_num(i + 1, j + 1);
    i128 z8den = (i128)4 * (pg.n - 1) * den;
    bool right = 2 * cx4 > z8den;
    bool high = 2 * cy4 > z8den;
    if (right && high) return 1;
    if (!right && high) return 2;
    if (!right && !high) return 3;
    return 4;
}

i64 cell_diam_bound(const CellStats& c) {
    i64 dx = c.max_x - c.min_x, dy = c.max_y - c.min_y;
    return isqrt((i128)dx * dx + (i128)dy * dy) + 1;
}

}  // namespace

CellClass classify_cell(const ActiveText& at, const PGrid& pg,
                        const CellTable& table, i64 i, i64 j) {
    CellRegion reg = cell_region(pg, i, j);
    const CellStats& c = table.at(i, j);
    if (reg == CellRegion::Straddle) {
        if (c.cnt == 0) return {CellClass::Straddling, {}};
        int quarter = quarter_for_straddle(pg, i, j);
        Point corner = quarter_corner(c, quarter);
        Point q;
        if (at.active(corner) && find_witness(at, corner, q))
            return {CellClass::Coverable, q};
        return {CellClass::Straddling, {}};
    }
    int quarter = reg == CellRegion::K1   ? 1
                  : reg == CellRegion::K2 ? 2
                  : reg == CellRegion::K3 ? 3
                                          : 4;
    if (c.cnt == 0) return {CellClass::Peripheral, {}};
    Point corner = quarter_corner(c, quarter);
    Point q;
    if (at.active(corner) && find_witness(at, corner, q))
        return {CellClass::Coverable, q};
    return {CellClass::Peripheral, {}};
}

namespace {

struct Collector {
    const ActiveText& at;
    const PGrid& pg;
    CellTable& tab;
    const Lattice& lat;
    i64 k;
    std::vector<TileStr>& pieces;
    std::vector<std::pair<Point, Symbol>>& fpts;
    i64& d_peri;
    i64& runs;
    i64& peri_cells;

    void peripheral_cell(i64 i, i64 j) {
        CellStats& c = tab.at(i, j);
        if (c.cnt == 0) return;
        bool any = false;
        for (Point p : c.pts)
            if (at.active(p)) {
                fpts.push_back({p, at.text.at(p)});
                any = true;
            }
        if (any) {
            d_peri = std::max(d_peri, cell_diam_bound(c));
            ++peri_cells;
        }
    }

    // cells [ia, ib] x {j} of one column (or {i} x [ja, jb] of one row)
    void coverable_run(i64 ia, i64 ib, i64 ja, i64 jb) {
        TileStr run;
        run.sig.phi0 = floor_div(pg.alpha[(size_t)ia], pg.D) + 1;
        run.sig.phi1 = floor_div(pg.alpha[(size_t)(ib + 1)] - 1, pg.D);
        run.sig.psi0 = floor_div(pg.beta[(size_t)ja], pg.D) + 1;
        run.sig.psi1 = floor_div(pg.beta[(size_t)(jb + 1)] - 1, pg.D);
        for (i64 i = ia; i <= ib; ++i)
            for (i64 j = ja; j <= jb; ++j) {
                CellStats& c = tab.at(i, j);
                for (Point p : c.pts) {
                    assert(at.active(p));
                    run.str.entries.push_back({p, at.text.at(p)});
                }
            }
        if (run.str.entries.empty()) return;
        run.str.sort_entries();
        ++runs;
        for (TileStr& piece : tile_decompose(lat, run, k))
            pieces.push_back(std::move(piece));
    }
};

}  // namespace

TextDecomposition text_decompose(const ActiveText& at, const Lattice& lat,
                                 i64 ell, i64 k) {
    if (ell < 1) fail("RangeError: text_decompose requires ell >= 1");
    TextDecomposition out;
    PGrid pg = build_pgrid(at.n, lat, ell);

    // trivial partitioning when some cell is wider or taller than m/4
    i64 den = pg.den();
    bool oversize = false;
    for (i64 i = 0; i < ell && !oversize; ++i)
        for (i64 j = 0; j < ell && !oversize; ++j) {
            CellGeo g = cell_geo(pg, i, j);
            if ((i128)4 * (g.max_x_num - g.min_x_num) >= (i128)at.m * den ||
                (i128)4 * (g.max_y_num - g.min_y_num) >= (i128)at.m * den)
                oversize = true;
        }
    if (oversize) {
        out.trivial = true;
        out.peripheral = at.ta;
        out.d_peripheral = at.n / 2 + 1;
        return out;
    }

    CellTable tab = build_cell_table(pg, at);
    std::vector<CellRegion> region((size_t)(ell * ell));
    for (i64 i = 0; i < ell; ++i)
        for (i64 j = 0; j < ell; ++j) region[(size_t)(i * ell + j)] = cell_region(pg, i, j);
    auto reg = [&](i64 i, i64 j) { return region[(size_t)(i * ell + j)]; };

    std::vector<std::pair<Point, Symbol>> fpts;
    Collector col{at, pg, tab, lat, k, out.pieces, fpts,
                  out.d_peripheral, out.coverable_runs, out.peripheral_cells};

    auto corner_active = [&](i64 i, i64 j, int quarter) -> int {
        const CellStats& c = tab.at(i, j);
        if (c.cnt == 0) return -1;  // empty, joins the current phase
        return at.active(quarter_corner(c, quarter)) ? 1 : 0;
    };

    // Walk one line of cells from the quarter's far end inward: a peripheral
    // prefix, then one merged coverable run per maximal active-corner block.
    auto process_line = [&](int quarter, i64 fixed, i64 from, i64 to, i64 step,
                            bool column) {
        i64 run_lo = kPosInf, run_hi = kNegInf;
        bool in_cov = false;
        auto flush = [&]() {
            if (in_cov) {
                if (column)
                    col.coverable_run(run_lo, run_hi, fixed, fixed);
                else
                    col.coverable_run(fixed, fixed, run_lo, run_hi);
            }
            in_cov = false;
            run_lo = kPosInf;
            run_hi = kNegInf;
        };
        for (i64 idx = from; idx != to; idx += step) {
            i64 i = column ? idx : fixed;
            i64 j = column ? fixed : idx;
            int st = corner_active(i, j, quarter);
            if (st == 1) {
                in_cov = true;
                run_lo = std::min(run_lo, idx);
                run_hi = std::max(run_hi, idx);
            } else if (st == 0) {
                flush();
                col.peripheral_cell(i, j);
            } else if (in_cov) {
                run_lo = std::min(run_lo, idx);
                run_hi = std::max(run_hi, idx);
            }
        }
        flush();
    };

    for (i64 j = 0; j < ell; ++j) {
        // K1 cells form a suffix of the column, K3 cells a prefix
        i64 i1 = ell;
        while (i1 > 0 && reg(i1 - 1, j) == CellRegion::K1) --i1;
        if (i1 < ell) process_line(1, j, ell - 1, i1 - 1, -1, true);
        i64 i3 = 0;
        while (i3 < ell && reg(i3, j) == CellRegion::K3) ++i3;
        if (i3 > 0) process_line(3, j, 0, i3, +1, true);
    }
    for (i64 i = 0; i < ell; ++i) {
        // K4 cells form a prefix of the row, K2 cells a suffix
        i64 j4 = 0;
        while (j4 < ell && reg(i, j4) == CellRegion::K4) ++j4;
        if (j4 > 0) process_line(4, i, 0, j4, +1, false);
        i64 j2 = ell;
        while (j2 > 0 && reg(i, j2 - 1) == CellRegion::K2) --j2;
        if (j2 < ell) process_line(2, i, ell - 1, j2 - 1, -1, false);
    }
    for (i64 i = 0; i < ell; ++i)
        for (i64 j = 0; j < ell; ++j) {
            if (reg(i, j) != CellRegion::Straddle) continue;
            ++out.straddle_cells;
            const CellStats& c = tab.at(i, j);
            if (c.cnt == 0) continue;
            int quarter = quarter_for_straddle(pg, i, j);
            if (corner_active(i, j, quarter) == 1)
                col.coverable_run(i, i, j, j);
            else
                col.peripheral_cell(i, j);
        }

    std::sort(fpts.begin(), fpts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.peripheral.entries = std::move(fpts);
    return out;
}

}  // namespace m2d
