#include "m2d/tiling.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace m2d {

Lattice::Lattice(Point phi_, Point psi_) : phi(phi_), psi(psi_) {
    if (!(phi.x >= 0 && phi.y < 0 && psi.x > 0 && psi.y >= 0))
        fail("CollinearBasis: basis vectors outside the required quadrants");
    i128 d = cross(phi, psi);
    if (d <= 0) fail("CollinearBasis: non-positive basis determinant");
    det = (i64)d;
}

bool TruncSig::contains(const Lattice& lat, Point u) const {
    if (u.x < x0 || u.x > x1 || u.y < y0 || u.y > y1) return false;
    i64 cp = lat.cross_phi(u), cs = lat.cross_psi(u);
    if (cp < phi0 || cp > phi1 || cs < psi0 || cs > psi1) return false;
    if (has_gamma && reduce_point(lat, u) != reduce_point(lat, gamma)) return false;
    return true;
}

BasisDecomp decompose_basis(const Lattice& lat, Point u) {
    if (lat.det <= 0) fail("CollinearBasis: lattice not initialised");
    BasisDecomp d;
    d.den = lat.det;
    d.s_num = -lat.cross_psi(u);
    d.t_num = lat.cross_phi(u);
    d.s_floor = floor_div(d.s_num, d.den);
    d.t_floor = floor_div(d.t_num, d.den);
    d.gamma = u - d.s_floor * lat.phi - d.t_floor * lat.psi;
    return d;
}

Point reduce_point(const Lattice& lat, Point u) {
    return decompose_basis(lat, u).gamma;
}

std::pair<i64, i64> lattice_coords(const Lattice& lat, Point u, Point base) {
    Point d = u - base;
    i64 s = -lat.cross_psi(d), t = lat.cross_phi(d);
    assert(s % lat.det == 0 && t % lat.det == 0);
    return {s / lat.det, t / lat.det};
}

std::vector<Point> gamma_set(const Lattice& lat) {
    if (lat.det <= 0) fail("CollinearBasis: lattice not initialised");
    std::vector<Point> out;
    // window [0, phi.x+psi.x] x [phi.y, psi.y]; half-open membership
    for (i64 x = 0; x <= lat.phi.x + lat.psi.x; ++x)
        for (i64 y = lat.phi.y; y <= lat.psi.y; ++y) {
            Point u{x, y};
            i64 cs = lat.cross_psi(u), cp = lat.cross_phi(u);
            if (-lat.det < cs && cs <= 0 && 0 <= cp && cp < lat.det)
                out.push_back(u);
        }
    std::sort(out.begin(), out.end());
    assert((i64)out.size() == lat.det);
    return out;
}

namespace {

std::vector<TileStr> cut_common(const Lattice& lat, const TileStr& s, bool along_phi) {
    if (!s.sig.has_gamma) fail("MissingSignature: cut requires a subtile signature");
    const Point step = along_phi ? lat.phi : lat.psi;
    // breakpoint values of the mismatch positions
    std::vector<i64> breaks;
    for (const auto& [u, c] : s.str.entries) {
        auto other = s.str.find(u + step);
        if (other && *other != c)
            breaks.push_back(along_phi ? lat.cross_psi(u) : lat.cross_phi(u));
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    i64 lo = along_phi ? s.sig.psi0 : s.sig.phi0;
    i64 hi = along_phi ? s.sig.psi1 : s.sig.phi1;
    // interval bounds: [a_i, a_{i+1}) for the phi cut, (a_i, a_{i+1}] for psi
    std::vector<std::pair<i64, i64>> ranges;
    i64 cur_lo = lo;
    for (i64 b : breaks) {
        if (along_phi) {
            // pieces [cur_lo, b-1], then [b, ...)
            if (b - 1 >= cur_lo) ranges.push_back({cur_lo, b - 1});
            cur_lo = b;
        } else {
            // pieces [cur_lo, b], then [b+1, ...)
            if (b >= cur_lo) ranges.push_back({cur_lo, b});
            cur_lo = b + 1;
        }
    }
    ranges.push_back({cur_lo, hi});

    std::vector<TileStr> out;
    std::vector<Sparse2D> buckets(ranges.size());
    for (const auto& e : s.str.entries) {
        i64 v = along_phi ? lat.cross_psi(e.first) : lat.cross_phi(e.first);
        auto it = std::upper_bound(ranges.begin(), ranges.end(), v,
                                   [](i64 x, const auto& r) { return x < r.first; });
        assert(it != ranges.begin());
        buckets[(size_t)(it - ranges.begin() - 1)].entries.push_back(e);
    }
    for (size_t i = 0; i < ranges.size(); ++i) {
        if (buckets[i].entries.empty()) continue;
        TileStr piece;
        piece.sig = s.sig;
        if (along_phi) {
            piece.sig.psi0 = ranges[i].first;
            piece.sig.psi1 = ranges[i].second;
        } else {
            piece.sig.phi0 = ranges[i].first;
            piece.sig.phi1 = ranges[i].second;
        }
        piece.str = std::move(buckets[i]);
        piece.chr = s.chr;
        out.push_back(std::move(piece));
    }
    return out;
}

}  // namespace

std::vector<TileStr> cut_phi(const Lattice& lat, const TileStr& s) {
    return cut_common(lat, s, true);
}

std::vector<TileStr> cut_psi(const Lattice& lat, const TileStr& s) {
    return cut_common(lat, s, false);
}

bool is_monochromatic(const TileStr& s) {
    for (const auto& [u, c] : s.str.entries)
        if (c != s.str.entries.front().second) return false;
    return true;
}

std::vector<TileStr> tile_decompose(const Lattice& lat, const TileStr& r, i64 /*k*/) {
    if (lat.det <= 0) fail("CollinearBasis: lattice not initialised");
    // split by congruence class
    std::map<Point, Sparse2D> classes;
    for (const auto& e : r.str.entries)
        classes[reduce_point(lat, e.first)].entries.push_back(e);

    std::vector<TileStr> out;
    for (auto& [gamma, pts] : classes) {
        TileStr cls;
        cls.sig = r.sig;
        cls.sig.has_gamma = true;
        cls.sig.gamma = gamma;
        cls.str = std::move(pts);
        for (TileStr& a : cut_phi(lat, cls))
            for (TileStr& b : cut_psi(lat, a)) {
                assert(is_monochromatic(b));
                b.chr = b.str.entries.front().second;
                out.push_back(std::move(b));
            }
    }
    return out;
}

TruncSig square_tile_sig(const Lattice& lat, i64 side) {
    TruncSig sig;
    sig.x0 = 0; sig.x1 = side - 1;
    sig.y0 = 0; sig.y1 = side - 1;
    Point corners[4] = {{0, 0}, {side - 1, 0}, {0, side - 1}, {side - 1, side - 1}};
    sig.phi0 = sig.psi0 = kPosInf;
    sig.phi1 = sig.psi1 = kNegInf;
    for (Point c : corners) {
        sig.phi0 = std::min(sig.phi0, lat.cross_phi(c));
        sig.phi1 = std::max(sig.phi1, lat.cross_phi(c));
        sig.psi0 = std::min(sig.psi0, lat.cross_psi(c));
        sig.psi1 = std::max(sig.psi1, lat.cross_psi(c));
    }
    return sig;
}

TileStr tile_from_grid(const Lattice& lat, const Grid2D& g) {
    if (!g.is_origin_square()) fail("BadShape: tile_from_grid expects an origin square");
    TileStr r;
    r.sig = square_tile_sig(lat, g.width);
    r.str = to_sparse(g);
    return r;
}

}  // namespace m2d
