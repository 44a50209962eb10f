#include <doctest.h>

#include <random>

#include "m2d/geom.hpp"
#include "m2d/error.hpp"

using namespace m2d;

TEST_CASE("cross products") {
    CHECK(cross({1, 0}, {0, 1}) == 1);
    CHECK(cross({2, 3}, {4, 6}) == 0);
    CHECK(cross({3, 1}, {1, 2}) == 5);
}

TEST_CASE("cross antisymmetry on random samples") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        Point u{(i64)(rng() % 2001) - 1000, (i64)(rng() % 2001) - 1000};
        Point v{(i64)(rng() % 2001) - 1000, (i64)(rng() % 2001) - 1000};
        CHECK(cross(u, v) == -cross(v, u));
    }
}

TEST_CASE("sqrt3_cmp basics") {
    CHECK(sqrt3_cmp(1, 1) == 1);
    CHECK(sqrt3_cmp(0, 0) == 0);
    CHECK(sqrt3_cmp(1, 2) == -1);
    CHECK(sqrt3_cmp(-1, -2) == 1);
    CHECK(sqrt3_cmp(-1, -1) == -1);
    CHECK(sqrt3_cmp(0, 5) == -1);
    CHECK(sqrt3_cmp(0, -5) == 1);
}

TEST_CASE("sqrt3_cmp agrees with rational brackets of sqrt(3)") {
    // continued fraction [1; 1, 2, 1, 2, ...]: consecutive convergents
    // bracket sqrt(3) from both sides
    i64 p0 = 1, q0 = 1, p1 = 2, q1 = 1;
    i64 lo = 1, ld = 1, hi = 2, hd = 1;
    for (int term = 2; q1 < (1ll << 56); ++term) {
        i64 a = (term % 2 == 0) ? 2 : 1;
        i64 p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if ((i128)p1 * p1 < (i128)3 * q1 * q1) { lo = p1; ld = q1; }
        else { hi = p1; hd = q1; }
    }
    REQUIRE((i128)lo * lo < (i128)3 * ld * ld);
    REQUIRE((i128)hi * hi > (i128)3 * hd * hd);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000000; ++i) {
        i64 a = (i64)(rng() % (1ull << 31)) - (1ll << 30);
        i64 b = (i64)(rng() % (1ull << 31)) - (1ll << 30);
        // a*sqrt(3) lies strictly between these two rationals
        i128 low_num = a >= 0 ? (i128)a * lo : (i128)a * hi;
        i128 low_den = a >= 0 ? ld : hd;
        i128 high_num = a >= 0 ? (i128)a * hi : (i128)a * lo;
        i128 high_den = a >= 0 ? hd : ld;
        int expect;
        if (low_num - (i128)b * low_den > 0)
            expect = 1;
        else if (high_num - (i128)b * high_den < 0)
            expect = -1;
        else
            expect = 0;  // the bracket is far too narrow to trap b unless a = b = 0
        CHECK(sqrt3_cmp(a, b) == expect);
    }
}

TEST_CASE("classify_cone examples") {
    auto c1 = classify_cone({1, 0});
    CHECK(c1.has(Cone::Q1));
    CHECK(c1.has(Cone::Q1plus));
    CHECK(!c1.has(Cone::Q2minus));

    auto c2 = classify_cone({-1, 1});
    CHECK(c2.has(Cone::Q2));
    CHECK(c2.has(Cone::Q2minus));

    auto c3 = classify_cone({-1, -1});
    CHECK(c3.has(Cone::Q3));
    CHECK(c3.has(Cone::Q3plus));

    CHECK_THROWS_AS(classify_cone({0, 0}), error);
}

TEST_CASE("cone bipartition is exhaustive on a window") {
    for (i64 x = -50; x <= 50; ++x)
        for (i64 y = -50; y <= 50; ++y) {
            if (x == 0 && y == 0) continue;
            ConeSet s = classify_cone({x, y});
            int quad = (int)s.has(Cone::Q1) + (int)s.has(Cone::Q2) +
                       (int)s.has(Cone::Q3) + (int)s.has(Cone::Q4);
            CHECK(quad == 1);
            int first = (int)s.has(Cone::Q1plus) + (int)s.has(Cone::Q3plus);
            int second = (int)s.has(Cone::Q2minus) + (int)s.has(Cone::Q4minus);
            CHECK(first + second == 1);
        }
}
