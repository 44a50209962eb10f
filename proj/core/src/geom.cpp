#include "m2d/geom.hpp"

#include <cmath>

#include "m2d/error.hpp"

namespace m2d {

i64 isqrt(i128 v) {
    if (v < 0) fail("RangeError: isqrt of negative");
    i64 r = (i64)__builtin_sqrtl((long double)v);
    if (r < 0) r = 0;
    while ((i128)r * r > v) --r;
    while ((i128)(r + 1) * (r + 1) <= v) ++r;
    return r;
}

ConeSet classify_cone(Point w) {
    if (w == Point{0, 0}) fail("ZeroVector: classify_cone requires w != (0,0)");
    ConeSet s;
    switch (quadrant_of(w)) {
        case 1: s.add(Cone::Q1); break;
        case 2: s.add(Cone::Q2); break;
        case 3: s.add(Cone::Q3); break;
        default: s.add(Cone::Q4); break;
    }
    // y >= -x/sqrt(3)  <=>  sqrt(3)*y + x >= 0;  y >= -x*sqrt(3)  <=>  y + sqrt(3)*x >= 0
    auto in_q1p = [](Point p) {
        return sqrt3_cmp(p.y, -p.x) >= 0 && sqrt3_cmp(p.x, -p.y) >= 0;
    };
    auto in_q2m = [](Point p) {
        return sqrt3_cmp(p.y, -p.x) > 0 && sqrt3_cmp(p.x, -p.y) < 0;
    };
    if (in_q1p(w)) s.add(Cone::Q1plus);
    if (in_q1p(-w)) s.add(Cone::Q3plus);
    if (in_q2m(w)) s.add(Cone::Q2minus);
    if (in_q2m(-w)) s.add(Cone::Q4minus);
    return s;
}

}  // namespace m2d
