#pragma once

#include <optional>
#include <vector>

#include "m2d/grid.hpp"

namespace m2d {

// Lattice spanned by the two period vectors. The quadrant constraints force
// det = cross(phi, psi) >= 1, so a valid basis is never collinear.
struct Lattice {
    Point phi;  // [0,inf) x (-inf,0)
    Point psi;  // (0,inf) x [0,inf)
    i64 det = 0;

    Lattice() = default;
    Lattice(Point phi_, Point psi_);

    i64 cross_phi(Point u) const { return phi.x * u.y - phi.y * u.x; }
    i64 cross_psi(Point u) const { return psi.x * u.y - psi.y * u.x; }
};

constexpr i64 kNegInf = std::numeric_limits<i64>::min();
constexpr i64 kPosInf = std::numeric_limits<i64>::max();

// Signature of a truncated (sub)tile: axis rectangle [x0,x1]x[y0,y1]
// (infinite bounds allowed) intersected with phi/psi cross-value ranges,
// optionally restricted to the congruence class of gamma.
struct TruncSig {
    i64 x0 = kNegInf, x1 = kPosInf, y0 = kNegInf, y1 = kPosInf;
    i64 phi0 = 0, phi1 = -1;  // empty unless set
    i64 psi0 = 0, psi1 = -1;
    bool has_gamma = false;
    Point gamma{0, 0};

    bool xy_truncated() const {
        return x0 != kNegInf || x1 != kPosInf || y0 != kNegInf || y1 != kPosInf;
    }
    bool contains(const Lattice& lat, Point u) const;
};

// A 2D string together with its (truncated) (sub)tile signature.
struct TileStr {
    TruncSig sig;
    Sparse2D str;
    Symbol chr = -1;  // set for monochromatic pieces
};

// Exact basis decomposition u = s*phi + t*psi with s = s_num/det,
// t = t_num/det, and the class representative gamma in the fundamental cell.
struct BasisDecomp {
    i64 s_num = 0, t_num = 0, den = 1;
    i64 s_floor = 0, t_floor = 0;
    Point gamma;
};

BasisDecomp decompose_basis(const Lattice& lat, Point u);
Point reduce_point(const Lattice& lat, Point u);

// Integer lattice coordinates of u relative to base (u must be congruent).
std::pair<i64, i64> lattice_coords(const Lattice& lat, Point u, Point base);

// Congruence-class representatives: integer points of
// {s*phi + t*psi : s,t in [0,1)}; exactly det of them.
std::vector<Point> gamma_set(const Lattice& lat);

// Partition into pieces with no mismatch under +phi; breakpoints are the
// psi-cross values of mismatch positions, pieces take [a_i, a_{i+1}).
std::vector<TileStr> cut_phi(const Lattice& lat, const TileStr& s);
// Symmetric, with phi-cross breakpoints and (a_i, a_{i+1}] pieces.
std::vector<TileStr> cut_psi(const Lattice& lat, const TileStr& s);

bool is_monochromatic(const TileStr& s);

// Partition of a (truncated) tile string into monochromatic (truncated)
// subtile strings: split by congruence class, then cut along both periods.
std::vector<TileStr> tile_decompose(const Lattice& lat, const TileStr& r, i64 k);

// Signature of a full origin square [side]^2 as a truncated tile.
TruncSig square_tile_sig(const Lattice& lat, i64 side);

TileStr tile_from_grid(const Lattice& lat, const Grid2D& g);

}  // namespace m2d
