#include <doctest.h>

#include <random>
#include <set>

#include "m2d/periods.hpp"
#include "m2d/textpart.hpp"
#include "testutil.hpp"

using namespace m2d;
using namespace m2d::test;

namespace {

std::vector<Point> random_offsets(std::mt19937_64& rng, i64 n, i64 m, i64 count) {
    std::set<Point> q;
    i64 side = n - m + 1;
    count = std::min(count, side * side);
    while ((i64)q.size() < count) q.insert({rnd(rng, side), rnd(rng, side)});
    return {q.begin(), q.end()};
}

i64 brute_border_sq(const ActiveText& at, Point u) {
    if (!at.active(u)) return 0;
    i64 best = kPosInf;
    for (i64 x = -1; x <= at.n; ++x)
        for (i64 y = -1; y <= at.n; ++y)
            if (!at.active({x, y}))
                best = std::min(best, (x - u.x) * (x - u.x) + (y - u.y) * (y - u.y));
    return best;
}

Lattice random_lattice(std::mt19937_64& rng, i64 span = 3) {
    return Lattice({rnd(rng, span + 1), -1 - rnd(rng, span)},
                   {1 + rnd(rng, span), rnd(rng, span + 1)});
}

// exhaustive grid properties: unique containment, diameter, monotonicity
void check_pgrid(const PGrid& pg) {
    i64 n = pg.n, ell = pg.ell;
    // (a) unique containment, checked through the strict line avoidance
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) {
            i64 va = pg.D * pg.lat.cross_phi({x, y});
            i64 vb = pg.D * pg.lat.cross_psi({x, y});
            CHECK(va > pg.alpha.front());
            CHECK(va < pg.alpha.back());
            CHECK(vb > pg.beta.front());
            CHECK(vb < pg.beta.back());
            for (i64 i = 0; i <= ell; ++i) {
                CHECK(va != pg.alpha[(size_t)i]);
                CHECK(vb != pg.beta[(size_t)i]);
            }
            auto [ci, cj] = pg.cell_of({x, y});
            CHECK(ci >= 0);
            CHECK(ci < ell);
            CHECK(cj >= 0);
            CHECK(cj < ell);
        }
    for (i64 i = 0; i < ell; ++i) {
        CHECK(pg.alpha[(size_t)i] < pg.alpha[(size_t)i + 1]);
        CHECK(pg.beta[(size_t)i] < pg.beta[(size_t)i + 1]);
    }
    // per-cell vertex extremes over the common denominator
    i64 den = pg.den();
    auto geo = [&](i64 i, i64 j) {
        i64 xs[4] = {pg.vx_num(i, j), pg.vx_num(i + 1, j), pg.vx_num(i, j + 1),
                     pg.vx_num(i + 1, j + 1)};
        i64 ys[4] = {pg.vy_num(i, j), pg.vy_num(i + 1, j), pg.vy_num(i, j + 1),
                     pg.vy_num(i + 1, j + 1)};
        struct G { i64 x0, x1, y0, y1; } g;
        g.x0 = std::min(std::min(xs[0], xs[1]), std::min(xs[2], xs[3]));
        g.x1 = std::max(std::max(xs[0], xs[1]), std::max(xs[2], xs[3]));
        g.y0 = std::min(std::min(ys[0], ys[1]), std::min(ys[2], ys[3]));
        g.y1 = std::max(std::max(ys[0], ys[1]), std::max(ys[2], ys[3]));
        return g;
    };
    // (b) diameter of the x/y-span box is at most 8n/ell
    for (i64 i = 0; i < ell; ++i)
        for (i64 j = 0; j < ell; ++j) {
            auto g = geo(i, j);
            i128 dx = g.x1 - g.x0, dy = g.y1 - g.y0;
            i128 lhs = (dx * dx + dy * dy) * (i128)ell * ell;
            i128 rhs = (i128)64 * n * n * den * den;
            CHECK(lhs <= rhs);
        }
    // (c) monotone extremes along both grid directions
    for (i64 i = 0; i + 1 < ell; ++i)
        for (i64 j = 0; j < ell; ++j) {
            auto a = geo(i, j), b = geo(i + 1, j);
            CHECK(a.x0 < b.x0);
            CHECK(a.x1 < b.x1);
            CHECK(a.y0 <= b.y0);
            CHECK(a.y1 <= b.y1);
        }
    for (i64 i = 0; i < ell; ++i)
        for (i64 j = 0; j + 1 < ell; ++j) {
            auto a = geo(i, j), b = geo(i, j + 1);
            CHECK(a.x0 >= b.x0);
            CHECK(a.x1 >= b.x1);
            CHECK(a.y0 < b.y0);
            CHECK(a.y1 < b.y1);
        }
}

}  // namespace

TEST_CASE("build_active shapes") {
    std::mt19937_64 rng(51);
    Grid2D t = random_grid(rng, 10, 10, 3);
    {
        ActiveText at = build_active(t, {{0, 0}}, 4);
        for (i64 x = 0; x < 10; ++x)
            for (i64 y = 0; y < 10; ++y)
                CHECK(at.active({x, y}) == (x < 4 && y < 4));
    }
    {
        std::vector<Point> all;
        for (i64 qy = 0; qy <= 6; ++qy)
            for (i64 qx = 0; qx <= 6; ++qx) all.push_back({qx, qy});
        ActiveText at = build_active(t, all, 4);
        CHECK((i64)at.ta.entries.size() == 100);
    }
    CHECK_THROWS_AS(build_active(t, {{7, 0}}, 4), error);
}

TEST_CASE("active text restriction preserves distances at candidates") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 30; ++it) {
        i64 m = 2 + rnd(rng, 5), n = m + 2 + rnd(rng, 8);
        Grid2D t = random_grid(rng, n, n, 3);
        Grid2D p = random_grid(rng, m, m, 3);
        auto q = random_offsets(rng, n, m, 1 + rnd(rng, 8));
        ActiveText at = build_active(t, q, m);
        // the union-of-placements mask agrees with a brute union
        std::vector<std::uint8_t> brute((size_t)(n * n), 0);
        for (Point qq : q)
            for (i64 x = 0; x < m; ++x)
                for (i64 y = 0; y < m; ++y)
                    brute[(size_t)((qq.y + y) * n + qq.x + x)] = 1;
        CHECK(brute == at.mask);
        for (Point qq : q) {
            i64 full = hamming_oracle(shift(p, qq), t).count;
            i64 restricted = hamming_oracle(shift(p, qq), at.ta).count;
            CHECK(full == restricted);
        }
    }
}

TEST_CASE("border_distance") {
    std::mt19937_64 rng(53);
    Grid2D t = random_grid(rng, 12, 12, 2);
    ActiveText at = build_active(t, {{0, 0}}, 6);
    CHECK(border_distance_sq(at, {7, 7}) == 0);   // inactive
    CHECK(border_distance_sq(at, {1, 1}) == 4);   // nearest outside is (-1,1)
    for (int probe = 0; probe < 200; ++probe) {
        Point u{rnd(rng, 12), rnd(rng, 12)};
        CHECK(border_distance_sq(at, u) == brute_border_sq(at, u));
    }
}

TEST_CASE("parallelogram grid: axis-aligned case") {
    Lattice lat({0, -1}, {1, 0});
    PGrid pg = build_pgrid(8, lat, 4);
    check_pgrid(pg);
    // ell = 1: a single cell holds everything
    PGrid pg1 = build_pgrid(8, lat, 1);
    for (i64 x = 0; x < 8; ++x)
        for (i64 y = 0; y < 8; ++y) {
            auto [i, j] = pg1.cell_of({x, y});
            CHECK(i == 0);
            CHECK(j == 0);
        }
}

TEST_CASE("parallelogram grid: random bases, exhaustive checker") {
    std::mt19937_64 rng(54);
    for (int it = 0; it < 40; ++it) {
        Lattice lat = random_lattice(rng);
        i64 n = 4 + rnd(rng, 29);
        i64 ell = 1 + rnd(rng, 7);
        PGrid pg = build_pgrid(n, lat, ell);
        check_pgrid(pg);
    }
}

TEST_CASE("classify_cell") {
    std::mt19937_64 rng(55);
    i64 n = 16, m = 8;
    Grid2D t = random_grid(rng, n, n, 2);
    Lattice lat({0, -1}, {1, 0});
    {
        // all offsets: interior cells are coverable
        std::vector<Point> all;
        for (i64 qy = 0; qy <= n - m; ++qy)
            for (i64 qx = 0; qx <= n - m; ++qx) all.push_back({qx, qy});
        ActiveText at = build_active(t, all, m);
        PGrid pg = build_pgrid(n, lat, 4);
        CellTable tab = build_cell_table(pg, at);
        for (i64 i = 0; i < 4; ++i)
            for (i64 j = 0; j < 4; ++j) {
                CellClass cc = classify_cell(at, pg, tab, i, j);
                if (cell_region(pg, i, j) == CellRegion::Straddle) continue;
                CHECK(cc.kind == CellClass::Coverable);
                // the witness placement covers the whole cell
                for (Point p : tab.at(i, j).pts) {
                    CHECK(p.x >= cc.q.x);
                    CHECK(p.x < cc.q.x + m);
                    CHECK(p.y >= cc.q.y);
                    CHECK(p.y < cc.q.y + m);
                }
            }
    }
    {
        // empty candidate set: everything is peripheral
        ActiveText at = build_active(t, {}, m);
        PGrid pg = build_pgrid(n, lat, 4);
        CellTable tab = build_cell_table(pg, at);
        for (i64 i = 0; i < 4; ++i)
            for (i64 j = 0; j < 4; ++j) {
                CellClass cc = classify_cell(at, pg, tab, i, j);
                if (cell_region(pg, i, j) == CellRegion::Straddle) continue;
                CHECK(cc.kind == CellClass::Peripheral);
            }
    }
}

TEST_CASE("text_decompose contract") {
    std::mt19937_64 rng(56);
    int nontrivial = 0;
    for (int it = 0; it < 80; ++it) {
        i64 m = 8 + rnd(rng, 9);
        i64 n = m + 2 * (1 + rnd(rng, m / 4));  // n <= 3m/2
        if (n > 3 * m / 2) n = 3 * m / 2 - ((3 * m / 2 - m) % 2);
        if (n <= m) continue;
        Lattice lat = random_lattice(rng, 2);
        Grid2D t = random_grid(rng, n, n, 2);
        auto q = random_offsets(rng, n, m, 1 + rnd(rng, (n - m + 1) * (n - m + 1)));
        ActiveText at = build_active(t, q, m);
        i64 ell = it % 3 == 0 ? 1 + rnd(rng, 6) : 7 + rnd(rng, 9);
        i64 k = rnd(rng, 6);
        TextDecomposition td = text_decompose(at, lat, ell, k);

        // partition law over the active text
        std::vector<std::pair<Point, Symbol>> all(td.peripheral.entries);
        for (const auto& p : td.pieces)
            for (const auto& e : p.str.entries) all.push_back(e);
        std::sort(all.begin(), all.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        CHECK(all == at.ta.entries);

        // pieces are monochromatic subtile strings matching their signature
        for (const auto& p : td.pieces) {
            CHECK(is_monochromatic(p));
            CHECK(!p.sig.xy_truncated());
            for (const auto& [u, c] : p.str.entries) CHECK(p.sig.contains(lat, u));
        }

        // the remainder is peripheral within the measured bound
        i64 d2 = td.d_peripheral * td.d_peripheral;
        for (const auto& [u, c] : td.peripheral.entries)
            CHECK(border_distance_sq(at, u) <= d2);
        if (!td.trivial) {
            ++nontrivial;
            // measured bound respects the pinned constant: d <= 8 m / ell
            CHECK(td.d_peripheral * ell <= 8 * m);
        }
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("text_decompose trivial and dense cases") {
    std::mt19937_64 rng(57);
    i64 m = 12, n = 18;
    Grid2D t = random_grid(rng, n, n, 2);
    std::vector<Point> all;
    for (i64 qy = 0; qy <= n - m; ++qy)
        for (i64 qx = 0; qx <= n - m; ++qx) all.push_back({qx, qy});
    ActiveText at = build_active(t, all, m);
    Lattice lat({0, -1}, {1, 0});
    {
        TextDecomposition td = text_decompose(at, lat, 1, 2);
        CHECK(td.trivial);
        CHECK(td.pieces.empty());
        CHECK((i64)td.peripheral.entries.size() == n * n);
    }
    {
        // fine grid over the full active square: no remainder, all pieces
        TextDecomposition td = text_decompose(at, lat, 16, 2);
        if (!td.trivial) {
            CHECK(td.peripheral.entries.empty());
            i64 total = 0;
            for (const auto& p : td.pieces) total += (i64)p.str.entries.size();
            CHECK(total == n * n);
        }
    }
}

TEST_CASE("coverable pieces inherit approximate periods") {
    std::mt19937_64 rng(58);
    for (int it = 0; it < 20; ++it) {
        i64 m = 12, n = 18, k = 2;
        // periodic-ish text keeps self-distances small
        Grid2D t(n, n);
        Lattice lat({1, -1}, {1, 1});
        for (i64 x = 0; x < n; ++x)
            for (i64 y = 0; y < n; ++y)
                t.at({x, y}) = (Symbol)(((x + y) % 2 + 2) % 2);
        for (i64 i = 0; i < k; ++i) t.at({rnd(rng, n), rnd(rng, n)}) = 3;
        std::vector<Point> q;
        for (i64 qy = 0; qy <= n - m; ++qy)
            for (i64 qx = 0; qx <= n - m; ++qx)
                if ((qx + qy) % 2 == 0) q.push_back({qx, qy});
        ActiveText at = build_active(t, q, m);
        TextDecomposition td = text_decompose(at, lat, 4, k);
        if (td.trivial) continue;
        // group pieces back into their coverable regions via the oracle
        for (const auto& p : td.pieces) {
            Sparse2D s = p.str;
            CHECK(hamming_oracle(shift(s, lat.phi), s).count <= 4 * k);
            CHECK(hamming_oracle(shift(s, lat.psi), s).count <= 4 * k);
        }
    }
}
