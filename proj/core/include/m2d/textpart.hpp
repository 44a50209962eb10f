#pragma once

#include <vector>

#include "m2d/grid.hpp"
#include "m2d/tiling.hpp"

namespace m2d {

// Restriction of the text to the union of candidate placements, with the
// lookup tables the decompositions need.
struct ActiveText {
    i64 n = 0, m = 0;
    Grid2D text;                     // the window's text
    std::vector<std::uint8_t> mask;  // active cells, mask[y*n+x]
    std::vector<std::uint8_t> qmask; // candidate offsets, qmask[qy*(n-m+1)+qx]
    std::vector<i64> prefix;         // 2D prefix sums of mask, (n+1)^2
    std::vector<i64> topmost, bottommost;   // per column, -1 when empty
    std::vector<i64> leftmost, rightmost;   // per row
    Sparse2D ta;                     // restriction of the text to the mask

    bool active(Point p) const {
        return p.x >= 0 && p.x < n && p.y >= 0 && p.y < n &&
               mask[(size_t)(p.y * n + p.x)];
    }
    bool is_candidate(Point q) const {
        i64 side = n - m + 1;
        return q.x >= 0 && q.x < side && q.y >= 0 && q.y < side &&
               qmask[(size_t)(q.y * side + q.x)];
    }
    // active cells in [x0,x1) x [y0,y1), clamped to the grid
    i64 active_in(i64 x0, i64 x1, i64 y0, i64 y1) const;
};

ActiveText build_active(const Grid2D& t, const std::vector<Point>& q, i64 m);
ActiveText active_from_parts(const Grid2D& t, std::vector<std::uint8_t> mask,
                             std::vector<std::uint8_t> qmask, i64 m);

// Mirror across the vertical center line x -> n-1-x (and the offset grid).
ActiveText reflect_x(const ActiveText& at);
// Mirror across the horizontal center line y -> n-1-y.
ActiveText reflect_y(const ActiveText& at);

// Squared Euclidean distance to the nearest point outside the active domain.
i64 border_distance_sq(const ActiveText& at, Point u);

// Grid of ell^2 parallelogram cells cut by phi- and psi-parallel lines whose
// offsets are rationals with denominator D, chosen to avoid every cross value
// of an integer point of [n]^2.
struct PGrid {
    Lattice lat;
    i64 ell = 0;
    i64 n = 0;
    i64 D = 0;                 // offset denominator, 2*ell^2
    std::vector<i64> alpha;    // ell+1 scaled phi-line offsets, increasing
    std::vector<i64> beta;     // ell+1 scaled psi-line offsets

    i64 den() const { return D * lat.det; }  // vertex coordinate denominator
    // numerators of the (i, j) line-intersection coordinates over den()
    i64 vx_num(i64 i, i64 j) const {
        return -beta[(size_t)j] * lat.phi.x + alpha[(size_t)i] * lat.psi.x;
    }
    i64 vy_num(i64 i, i64 j) const {
        return -beta[(size_t)j] * lat.phi.y + alpha[(size_t)i] * lat.psi.y;
    }
    // cell indices of an integer point (never on a line)
    std::pair<i64, i64> cell_of(Point u) const;
};

PGrid build_pgrid(i64 n, const Lattice& lat, i64 ell);

// Integer-point statistics per cell.
struct CellStats {
    i64 cnt = 0, act = 0;
    i64 min_x = 0, max_x = 0, min_y = 0, max_y = 0;  // over integer points
    std::vector<Point> pts;
};

struct CellTable {
    i64 ell = 0;
    std::vector<CellStats> cells;  // cells[i*ell+j]
    CellStats& at(i64 i, i64 j) { return cells[(size_t)(i * ell + j)]; }
    const CellStats& at(i64 i, i64 j) const { return cells[(size_t)(i * ell + j)]; }
};

CellTable build_cell_table(const PGrid& pg, const ActiveText& at);

// Continuous placement of a cell relative to the two quarter lines.
enum class CellRegion { K1, K2, K3, K4, Straddle };
CellRegion cell_region(const PGrid& pg, i64 i, i64 j);

struct CellClass {
    enum Kind { Coverable, Peripheral, Straddling } kind;
    Point q{0, 0};  // witness placement for Coverable
};

CellClass classify_cell(const ActiveText& at, const PGrid& pg,
                        const CellTable& table, i64 i, i64 j);

struct TextDecomposition {
    std::vector<TileStr> pieces;  // monochromatic subtile strings
    Sparse2D peripheral;          // remainder string F
    i64 d_peripheral = 0;         // measured peripherality bound for F
    bool trivial = false;         // early-out path taken
    i64 coverable_runs = 0;
    i64 peripheral_cells = 0;
    i64 straddle_cells = 0;
};

TextDecomposition text_decompose(const ActiveText& at, const Lattice& lat,
                                 i64 ell, i64 k);

}  // namespace m2d
