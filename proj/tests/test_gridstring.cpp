#include <doctest.h>

#include <random>
#include <sstream>

#include "m2d/grid.hpp"
#include "m2d/grid_io.hpp"
#include "testutil.hpp"

using namespace m2d;
using namespace m2d::test;

TEST_CASE("shift basics") {
    Sparse2D s;
    s.entries = {{{0, 0}, 5}};
    Sparse2D t = shift(s, {2, 3});
    CHECK(t.entries[0].first == Point{2, 3});
    CHECK(t.entries[0].second == 5);
    Sparse2D back = shift(shift(s, {7, -4}), {-7, 4});
    CHECK(back.entries == s.entries);

    Grid2D g(3, 2, 1);
    CHECK(shift(g, {0, 0}).origin == g.origin);
}

TEST_CASE("hamming_oracle basics") {
    Grid2D a(2, 2, 0), b(2, 2, 0);
    CHECK(hamming_oracle(a, b).count == 0);
    b.at({1, 1}) = 9;
    auto r = hamming_oracle(a, b);
    CHECK(r.count == 1);
    CHECK(r.mismatches[0] == Point{1, 1});

    // wildcard matches everything
    a.at({1, 1}) = kWildcard;
    CHECK(hamming_oracle(a, b).count == 0);

    // partial-overlap placements
    Grid2D p(1, 1, 0);
    Grid2D t(2, 2, 0);
    t.at({1, 0}) = 1;
    CHECK(hamming_oracle(shift(p, {0, 0}), t).count == 0);
    CHECK(hamming_oracle(shift(p, {1, 0}), t).count == 1);
}

TEST_CASE("Ham(S+d, S) = Ham(S, S-d)") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        Grid2D s = random_grid(rng, 5, 7, 2);
        Point d{rnd(rng, 7) - 3, rnd(rng, 7) - 3};
        CHECK(hamming_oracle(shift(s, d), s).count ==
              hamming_oracle(s, shift(s, -d)).count);
    }
}

TEST_CASE("oracle_all_offsets") {
    std::mt19937_64 rng(4);
    Grid2D p = random_grid(rng, 4, 4, 3);
    CHECK(oracle_all_offsets(p, p, 16).at(0, 0) == 0);

    Grid2D pa(2, 2, 0), tb(3, 3, 1);
    auto r = oracle_all_offsets(pa, tb, 1);
    for (auto c : r.counts) CHECK(c == 2);

    Grid2D t = random_grid(rng, 8, 8, 3);
    Grid2D p2 = random_grid(rng, 4, 4, 3);
    auto got = oracle_all_offsets(p2, t, 3);
    for (i64 qy = 0; qy <= 4; ++qy)
        for (i64 qx = 0; qx <= 4; ++qx) {
            i64 d = 0;
            for (i64 x = 0; x < 4; ++x)
                for (i64 y = 0; y < 4; ++y)
                    d += p2.at({x, y}) != t.at({qx + x, qy + y});
            CHECK(got.at(qx, qy) == std::min<i64>(d, 4));
        }

    Grid2D rect(3, 2, 0);
    CHECK_THROWS_AS(oracle_all_offsets(rect, t, 1), error);
}

TEST_CASE("linearize is column-major") {
    Grid2D g(2, 2);
    g.at({0, 0}) = 'a';
    g.at({0, 1}) = 'b';
    g.at({1, 0}) = 'c';
    g.at({1, 1}) = 'd';
    Lin1D lin = linearize(g);
    CHECK(lin.symbols == std::vector<Symbol>{'a', 'b', 'c', 'd'});
    CHECK(lin.height == 2);

    Sparse2D holes;
    holes.entries = {{{0, 0}, 1}, {{1, 1}, 2}};
    Lin1D lh = linearize(holes);
    CHECK(lh.symbols == std::vector<Symbol>{1, kWildcard, kWildcard, 2});

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        i64 w = 1 + rnd(rng, 6), h = 1 + rnd(rng, 6);
        Grid2D r = random_grid(rng, w, h, 3);
        CHECK(linearize(r).size() == w * h);
    }
}

TEST_CASE("pad_embed matches the oracle") {
    {
        Grid2D p(1, 1, 0);
        Grid2D t(2, 1, 0);
        t.at({1, 0}) = 1;
        PadEmbed pe = pad_embed(p, t);
        auto d = naive_hamming_1d(pe.lin_p, pe.lin_t);
        CHECK(d[(size_t)pe.to_1d({0, 0})] == 0);
        CHECK(d[(size_t)pe.to_1d({1, 0})] == 1);
    }
    std::mt19937_64 rng(6);
    for (int it = 0; it < 200; ++it) {
        i64 pw = 1 + rnd(rng, 4), ph = 1 + rnd(rng, 4);
        i64 tw = pw + rnd(rng, 4), th = ph + rnd(rng, 4);
        Grid2D p = random_grid(rng, pw, ph, 3, 10);
        Grid2D t = random_grid(rng, tw, th, 3, 10);
        PadEmbed pe = pad_embed(p, t);
        auto d = naive_hamming_1d(pe.lin_p, pe.lin_t);
        for (i64 qx = 0; qx + pw <= tw; ++qx)
            for (i64 qy = 0; qy + ph <= th; ++qy) {
                Point q{qx, qy};
                CHECK(d[(size_t)pe.to_1d(q)] == hamming_oracle(shift(p, q), t).count);
            }
    }
}

TEST_CASE("grid io round trip") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 20; ++it) {
        Alphabet alpha;
        for (Symbol s = 0; s < 5; ++s) alpha.intern("tok" + std::to_string(s));
        Grid2D g = random_grid(rng, 1 + rnd(rng, 7), 1 + rnd(rng, 7), 5, 10);
        std::ostringstream out;
        write_grid(out, g, alpha);
        std::istringstream in(out.str());
        Alphabet alpha2;
        for (Symbol s = 0; s < 5; ++s) alpha2.intern("tok" + std::to_string(s));
        Grid2D back = read_grid(in, alpha2);
        CHECK(back.width == g.width);
        CHECK(back.height == g.height);
        CHECK(back.cells == g.cells);
    }
}

TEST_CASE("grid io rejects malformed input") {
    Alphabet alpha;
    std::istringstream bad1("2");
    CHECK_THROWS_AS(read_grid(bad1, alpha), error);
    std::istringstream bad2("2 2 a b c");
    CHECK_THROWS_AS(read_grid(bad2, alpha), error);
    std::istringstream bad3("0 3");
    CHECK_THROWS_AS(read_grid(bad3, alpha), error);
}
