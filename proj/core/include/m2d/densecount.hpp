#pragma once

#include <vector>

#include "m2d/grid.hpp"
#include "m2d/sparsecount.hpp"
#include "m2d/textpart.hpp"

namespace m2d {

// Restrictions of F to the four open quarters around z = (n-1)/2. For even n
// no integer point lies on a boundary; odd boundary points join the lower /
// left side to keep the partition total.
struct QuarterSplit {
    Sparse2D f1, f2, f3, f4;
};

QuarterSplit split_quarters(const Sparse2D& f, i64 n);

// Width-bounded vertical strips of a peripheral part in the first quarter,
// with the minimal height bounds h(V) from the active-text column tops.
struct StripSet {
    struct Strip {
        Sparse2D pts;
        i64 x_lo = 0;  // band start
        i64 h = 0;
    };
    std::vector<Strip> strips;
    i64 sum_h = 0;
};

StripSet strip_partition(const Sparse2D& f1, const ActiveText& at, i64 d);

// Exact Ham(P+q, F1'') for candidate offsets, for a d-peripheral frequent
// part inside the first quarter. Entries for non-candidate offsets may be
// partial sums and must not be read.
std::vector<std::int64_t> sigma_border(const Grid2D& p, const Sparse2D& f1pp,
                                       const ActiveText& at, i64 d);

// Exact Ham(P+q, F) for candidate offsets, for a d-peripheral string F:
// infrequent characters go through the subtile counting path as singletons,
// frequent ones through sigma_border per reflected quarter.
std::vector<std::int64_t> dense_distances(const Grid2D& p, const Sparse2D& f,
                                          const ActiveText& at, i64 d,
                                          const PatternPieces& pieces, i64 k);

}  // namespace m2d
