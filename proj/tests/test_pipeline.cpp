#include <doctest.h>

#include <random>

#include "m2d/bench.hpp"
#include "m2d/convolve.hpp"
#include "m2d/pipeline.hpp"
#include "testutil.hpp"

using namespace m2d;
using namespace m2d::test;

TEST_CASE("cover_text") {
    {
        TextCover c = cover_text(12, 8);
        CHECK(c.nprime == 12);
        CHECK(c.origins.size() == 1);
    }
    {
        TextCover c = cover_text(23, 8);
        CHECK(c.nprime == 12);
        std::vector<i64> xs;
        for (Point o : c.origins)
            if (o.y == 0) xs.push_back(o.x);
        CHECK(xs == std::vector<i64>{0, 5, 10, 11});
    }
    std::mt19937_64 rng(81);
    for (int it = 0; it < 200; ++it) {
        i64 m = 2 + rnd(rng, 40);
        i64 n = m + rnd(rng, 100);
        TextCover c = cover_text(n, m);
        CHECK(c.nprime <= n);
        CHECK(c.nprime >= m);
        CHECK(c.nprime <= 3 * m / 2 + 1);
        // every offset is interior to at least one window
        std::vector<std::uint8_t> covered((size_t)((n - m + 1) * (n - m + 1)), 0);
        for (Point o : c.origins) {
            CHECK(o.x >= 0);
            CHECK(o.x + c.nprime <= n);
            for (i64 qy = 0; qy <= c.nprime - m; ++qy)
                for (i64 qx = 0; qx <= c.nprime - m; ++qx)
                    covered[(size_t)((o.y + qy) * (n - m + 1) + o.x + qx)] = 1;
        }
        for (auto v : covered) CHECK(v == 1);
        // window count within the constant
        double ratio = (double)n / (double)m + 1.0;
        CHECK((double)c.origins.size() <= 9.0 * ratio * ratio);
    }
}

TEST_CASE("match_window equals the oracle") {
    std::mt19937_64 rng(82);
    int full_branches = 0;
    for (int it = 0; it < 120; ++it) {
        i64 m = 4 + rnd(rng, 13);
        i64 np = 2 * ((m + 1 + rnd(rng, m / 2 + 1)) / 2);
        if (np <= m) np = m + 2 - (m % 2);
        if (np > 3 * m / 2) np = m + 2 - (m % 2);
        bool periodicish = it % 2 == 0;
        Grid2D tw(np, np);
        if (periodicish) {
            for (i64 x = 0; x < np; ++x)
                for (i64 y = 0; y < np; ++y) tw.at({x, y}) = (Symbol)((x + y) % 2);
            for (int f = 0; f < 4; ++f) tw.at({rnd(rng, np), rnd(rng, np)}) = 2;
        } else {
            tw = random_grid(rng, np, np, 1 + rnd(rng, 4));
        }
        Grid2D p(m, m);
        for (i64 x = 0; x < m; ++x)
            for (i64 y = 0; y < m; ++y)
                p.at({x, y}) = periodicish ? (Symbol)((x + y) % 2)
                                           : (Symbol)rnd(rng, 4);
        i64 k = rnd(rng, 9);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        cfg.algo = it % 3 == 2 ? PipelineConfig::Algo::Full : PipelineConfig::Algo::Auto;
        RunReport rep;
        rep.m = m;
        OffsetCounts got = match_window(p, tw, k, cfg, cfg.seed, &rep);
        full_branches += (int)rep.branch_full;
        CHECK(got == oracle_all_offsets(p, tw, k));
    }
    CHECK(full_branches == 0);  // candidate sets this small always verify

    // larger near-constant windows: every offset stays a candidate, so the
    // decomposition path engages
    for (int it = 0; it < 15; ++it) {
        i64 m = 32 + 2 * rnd(rng, 5);
        i64 np = 2 * ((3 * m) / 4);
        i64 k = 2 + rnd(rng, 7);
        Grid2D tw(np, np, 0);
        for (i64 f = 0; f < k; ++f) {
            Point u{rnd(rng, np), rnd(rng, np)};
            tw.at(u) = (Symbol)(1 + rnd(rng, 2));
        }
        Grid2D p(m, m, 0);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        cfg.algo = PipelineConfig::Algo::Full;
        RunReport rep;
        OffsetCounts got = match_window(p, tw, k, cfg, cfg.seed, &rep);
        full_branches += (int)rep.branch_full;
        CHECK(got == oracle_all_offsets(p, tw, k));
    }
    CHECK(full_branches >= 10);  // the decomposition path is genuinely exercised
}

TEST_CASE("kmismatch equals the oracle across regimes") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 150; ++it) {
        i64 m = 2 + rnd(rng, 15);
        i64 n = m + rnd(rng, 33);
        i64 sigma = std::vector<i64>{1, 2, 4, 16}[(size_t)rnd(rng, 4)];
        i64 k = rnd(rng, 9);
        Grid2D t = random_grid(rng, n, n, sigma);
        Grid2D p = random_grid(rng, m, m, sigma);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        CHECK(kmismatch(p, t, cfg) == oracle_all_offsets(p, t, k));
    }
}

TEST_CASE("branch forcing yields identical results") {
    std::mt19937_64 rng(84);
    for (int it = 0; it < 40; ++it) {
        i64 m = 2 + rnd(rng, 13);
        i64 n = m + rnd(rng, 20);
        i64 k = rnd(rng, 7);
        Grid2D t = random_grid(rng, n, n, 1 + rnd(rng, 4));
        Grid2D p = random_grid(rng, m, m, 1 + rnd(rng, 4));
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        OffsetCounts a = kmismatch(p, t, cfg);
        cfg.algo = PipelineConfig::Algo::Naive;
        OffsetCounts b = kmismatch(p, t, cfg);
        cfg.algo = PipelineConfig::Algo::Kangaroo;
        OffsetCounts c = kmismatch(p, t, cfg);
        cfg.algo = PipelineConfig::Algo::Full;
        OffsetCounts d = kmismatch(p, t, cfg);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a == d);
    }
}

TEST_CASE("planted occurrence is found") {
    std::mt19937_64 rng(85);
    for (int it = 0; it < 25; ++it) {
        i64 m = 6 + rnd(rng, 10);
        i64 n = m + 4 + rnd(rng, 20);
        i64 k = 2 + rnd(rng, 6);
        PlantedInstance inst = gen_planted_occurrence(n, m, k, 6, rng);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        OffsetCounts out = kmismatch(inst.pattern, inst.text, cfg);
        CHECK(out.at(inst.offset.x, inst.offset.y) <= k);
        CHECK(out == oracle_all_offsets(inst.pattern, inst.text, k));
    }
}

TEST_CASE("candidate filter soundness and effectiveness (exact shortcut)") {
    std::mt19937_64 rng(86);
    for (int it = 0; it < 30; ++it) {
        i64 m = 16;
        i64 np = 24;
        i64 k = 1 + rnd(rng, 8);
        Grid2D tw = random_grid(rng, np, np, 4);
        Grid2D p = random_grid(rng, m, m, 4);
        ApproxParams ap;
        ap.seed = rng();
        DistMap dm = approx_2d(p, tw, ap);
        auto oracle = oracle_all_offsets(p, tw, m * m + 1);
        for (i64 qy = 0; qy <= np - m; ++qy)
            for (i64 qx = 0; qx <= np - m; ++qx) {
                bool in_q = dm.at({qx, qy}) <= 2 * k;
                if (oracle.at(qx, qy) <= k) CHECK(in_q);
                if (in_q) CHECK(oracle.at(qx, qy) <= 2 * k);
            }
    }
}

TEST_CASE("wildcards fall back to exact counting") {
    std::mt19937_64 rng(87);
    for (int it = 0; it < 15; ++it) {
        i64 m = 2 + rnd(rng, 8), n = m + rnd(rng, 10);
        Grid2D t = random_grid(rng, n, n, 3, 10);
        Grid2D p = random_grid(rng, m, m, 3, 10);
        PipelineConfig cfg;
        cfg.k = rnd(rng, 5);
        RunReport rep;
        OffsetCounts out = kmismatch(p, t, cfg, &rep);
        CHECK(out == oracle_all_offsets(p, t, cfg.k));
        CHECK(rep.algo == "convolve");
    }
}

TEST_CASE("window merging is consistent") {
    std::mt19937_64 rng(88);
    for (int it = 0; it < 10; ++it) {
        i64 m = 16, n = 40;
        Grid2D t = random_grid(rng, n, n, 4);
        Grid2D p = random_grid(rng, m, m, 4);
        PipelineConfig cfg;
        cfg.k = 4 + rnd(rng, 5);
        cfg.seed = rng();
        RunReport rep;
        OffsetCounts out = kmismatch(p, t, cfg, &rep);
        CHECK(rep.windows > 1);
        CHECK(rep.merge_disagreements == 0);  // exact filter at this alphabet
        CHECK(out == oracle_all_offsets(p, t, cfg.k));
    }
}
