#pragma once

#include <cstdint>
#include <tuple>

namespace m2d {

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

// Planar integer vector. Also used for offsets and period vectors.
struct Point {
    i64 x = 0;
    i64 y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
    friend Point operator*(i64 s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    // lexicographic by (x, y)
    friend bool operator<(Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline i128 cross(Point u, Point v) {
    return (i128)u.x * v.y - (i128)u.y * v.x;
}

inline i128 dot(Point u, Point v) {
    return (i128)u.x * v.x + (i128)u.y * v.y;
}

inline i128 norm2(Point u) { return dot(u, u); }

// Sign of a*sqrt(3) - b, computed exactly. Returns -1, 0 or +1.
// Sign cases first, then 3a^2 vs b^2; 3a^2 = b^2 has no nonzero integer
// solutions, so the result is 0 only for a = b = 0.
inline int sqrt3_cmp(i64 a, i64 b) {
    if (a == 0) return b == 0 ? 0 : (b < 0 ? 1 : -1);
    if (a > 0 && b <= 0) return 1;
    if (a < 0 && b >= 0) return -1;
    i128 lhs = (i128)3 * a * a;
    i128 rhs = (i128)b * b;
    if (lhs == rhs) return 0;  // unreachable for a != 0
    bool big = lhs > rhs;
    return (a > 0) == big ? 1 : -1;
}

// Quadrants and the widened/narrowed 30-degree cones around them.
enum class Cone : unsigned {
    Q1 = 1u << 0,
    Q2 = 1u << 1,
    Q3 = 1u << 2,
    Q4 = 1u << 3,
    Q1plus = 1u << 4,
    Q2minus = 1u << 5,
    Q3plus = 1u << 6,
    Q4minus = 1u << 7,
};

struct ConeSet {
    unsigned bits = 0;
    bool has(Cone c) const { return bits & static_cast<unsigned>(c); }
    void add(Cone c) { bits |= static_cast<unsigned>(c); }
};

// Exact cone membership. Precondition: w != (0,0); throws otherwise.
ConeSet classify_cone(Point w);

// Quadrant index in 1..4 for w != (0,0). The four quadrants
//   Q1 = (0,inf) x [0,inf)    Q2 = (-inf,0] x (0,inf)
//   Q3 = (-inf,0) x (-inf,0]  Q4 = [0,inf) x (-inf,0)
// partition the punctured plane.
inline int quadrant_of(Point w) {
    if (w.x > 0 && w.y >= 0) return 1;
    if (w.x <= 0 && w.y > 0) return 2;
    if (w.x < 0 && w.y <= 0) return 3;
    return 4;
}

// Rotation by -90 degrees; maps Q_{i+1} onto Q_i.
inline Point rot_cw(Point p) { return {p.y, -p.x}; }
inline Point rot_ccw(Point p) { return {-p.y, p.x}; }

inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return r != 0 && ((r < 0) != (b < 0)) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

inline i64 floor_div128(i128 a, i64 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return (i64)q;
}

inline i64 ceil_div128(i128 a, i64 b) { return -floor_div128(-a, b); }

// Largest s with s*s <= v.
i64 isqrt(i128 v);

}  // namespace m2d
