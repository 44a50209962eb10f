#pragma once

#include <utility>
#include <vector>

#include "m2d/grid.hpp"

namespace m2d {

struct PeriodPair {
    Point psi;   // in (0,inf) x [0,inf)
    Point phi;   // in [0,inf) x (-inf,0)
    Point u, v;  // psi = u - v, witnesses from the input set
    Point up, vp;  // phi = up - vp
    i64 antichain_len = 0;
};

// Pair of distinct points with minimal |t-s|; ties broken by the
// lexicographically least (s, t).
std::pair<Point, Point> closest_pair(const std::vector<Point>& u);

// Longest chain of the relation "difference in Q2minus", computed by sorting
// along sqrt(3)*y + x and taking a longest increasing subsequence in the
// second cone order. Equivalently a longest antichain of the Q1plus order.
std::vector<Point> longest_chain_q2(const std::vector<Point>& u);

// Two short approximate-period vectors spanning a wide angle, from a large
// candidate set U inside [ell+1]^2 of size > 16*ell.
PeriodPair get_periods(const std::vector<Point>& u, i64 ell);

// Ham(P + delta, P) <= bound, by direct overlap counting.
bool candidate_period_check(const Grid2D& p, Point delta, i64 bound);
i64 self_shift_distance(const Grid2D& p, Point delta);

}  // namespace m2d
