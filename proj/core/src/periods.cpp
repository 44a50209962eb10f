#include "m2d/periods.hpp"

#include <algorithm>
#include <cassert>

namespace m2d {

namespace {

struct PairBest {
    i128 d2 = -1;
    Point s, t;

    void offer(Point a, Point b) {
        if (b < a) std::swap(a, b);
        i128 d = norm2(b - a);
        if (d2 < 0 || d < d2 ||
            (d == d2 && (a < s || (a == s && b < t)))) {
            d2 = d;
            s = a;
            t = b;
        }
    }
};

void closest_rec(std::vector<Point>& pts, i64 lo, i64 hi, PairBest& best) {
    if (hi - lo <= 64) {
        for (i64 i = lo; i < hi; ++i)
            for (i64 j = i + 1; j < hi; ++j) best.offer(pts[i], pts[j]);
        return;
    }
    i64 mid = (lo + hi) / 2;
    i64 midx = pts[mid].x;
    closest_rec(pts, lo, mid, best);
    closest_rec(pts, mid, hi, best);
    std::vector<Point> strip;
    for (i64 i = lo; i < hi; ++i) {
        i128 dx = pts[i].x - midx;
        if (dx * dx <= best.d2) strip.push_back(pts[i]);
    }
    std::sort(strip.begin(), strip.end(),
              [](Point a, Point b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
    for (size_t i = 0; i < strip.size(); ++i)
        for (size_t j = i + 1; j < strip.size(); ++j) {
            i128 dy = strip[j].y - strip[i].y;
            if (dy * dy > best.d2) break;
            best.offer(strip[i], strip[j]);
        }
}

}  // namespace

std::pair<Point, Point> closest_pair(const std::vector<Point>& u) {
    if (u.size() < 2) fail("TooFew: closest_pair needs at least two points");
    std::vector<Point> pts = u;
    std::sort(pts.begin(), pts.end());
    PairBest best;
    closest_rec(pts, 0, (i64)pts.size(), best);
    return {best.s, best.t};
}

namespace {

// u precedes v along sqrt(3)*y + x
int cmp_a(Point u, Point v) { return sqrt3_cmp(u.y - v.y, v.x - u.x); }
// u precedes v along decreasing sqrt(3)*x + y
int cmp_b(Point u, Point v) { return sqrt3_cmp(v.x - u.x, u.y - v.y); }

}  // namespace

std::vector<Point> longest_chain_q2(const std::vector<Point>& u) {
    if (u.empty()) return {};
    std::vector<Point> pts = u;
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        int c = cmp_a(a, b);
        if (c != 0) return c < 0;
        return cmp_b(b, a) < 0;  // ties: a first iff b precedes a in the b-order
    });
    // longest strictly increasing subsequence under cmp_b
    std::vector<i64> tails;          // indices into pts
    std::vector<i64> parent(pts.size(), -1);
    for (i64 i = 0; i < (i64)pts.size(); ++i) {
        auto it = std::lower_bound(tails.begin(), tails.end(), i,
                                   [&](i64 tail, i64 cur) {
                                       return cmp_b(pts[tail], pts[cur]) < 0;
                                   });
        i64 pos = it - tails.begin();
        parent[i] = pos > 0 ? tails[pos - 1] : -1;
        if (it == tails.end())
            tails.push_back(i);
        else
            *it = i;
    }
    std::vector<Point> chain;
    for (i64 i = tails.empty() ? -1 : tails.back(); i >= 0; i = parent[i])
        chain.push_back(pts[i]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

PeriodPair get_periods(const std::vector<Point>& u_in, i64 ell) {
    if (ell < 1) fail("PreconditionViolated: ell must be positive");
    std::vector<Point> u = u_in;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if ((i64)u.size() <= 16 * ell)
        fail("PreconditionViolated: |U| must exceed 16*ell");
    for (Point p : u)
        if (p.x < 0 || p.x > ell || p.y < 0 || p.y > ell)
            fail("PreconditionViolated: U must lie inside [ell+1]^2");

    auto [s, t] = closest_pair(u);
    Point w = t - s;
    int quad = quadrant_of(w);

    // Rotate so the closest-pair vector lies in Q1, find the second vector in
    // Q2minus there, then rotate back.
    auto rot_k = [](Point p, int k) {
        for (int i = 0; i < k; ++i) p = rot_cw(p);
        return p;
    };
    auto unrot_k = [](Point p, int k) {
        for (int i = 0; i < k; ++i) p = rot_ccw(p);
        return p;
    };
    int k = quad - 1;
    std::vector<Point> ur(u.size());
    for (size_t i = 0; i < u.size(); ++i) ur[i] = rot_k(u[i], k);

    std::vector<Point> chain = longest_chain_q2(ur);
    if (chain.size() < 2)
        fail("PreconditionViolated: antichain of size >= 2 not found");
    auto [sr, tr] = closest_pair(chain);
    if (!classify_cone(tr - sr).has(Cone::Q2minus)) std::swap(sr, tr);
    Point sp = unrot_k(sr, k), tp = unrot_k(tr, k);
    Point wp = tp - sp;

    PeriodPair out;
    out.antichain_len = (i64)chain.size();
    switch (quad) {
        case 1:
            out.psi = w;   out.u = t;   out.v = s;
            out.phi = -wp; out.up = sp; out.vp = tp;
            break;
        case 2:
            out.psi = -wp; out.u = sp;  out.v = tp;
            out.phi = -w;  out.up = s;  out.vp = t;
            break;
        case 3:
            out.psi = -w;  out.u = s;   out.v = t;
            out.phi = wp;  out.up = tp; out.vp = sp;
            break;
        default:
            out.psi = wp;  out.u = tp;  out.v = sp;
            out.phi = w;   out.up = t;  out.vp = s;
            break;
    }
    assert(out.psi.x > 0 && out.psi.y >= 0);
    assert(out.phi.x >= 0 && out.phi.y < 0);
    assert(cross(out.phi, out.psi) >= 0);
    return out;
}

i64 self_shift_distance(const Grid2D& p, Point delta) {
    return hamming_oracle(shift(p, delta), p).count;
}

bool candidate_period_check(const Grid2D& p, Point delta, i64 bound) {
    return self_shift_distance(p, delta) <= bound;
}

}  // namespace m2d
