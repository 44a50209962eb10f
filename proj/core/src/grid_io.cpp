#include "m2d/grid_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace m2d {

Grid2D read_grid(std::istream& in, Alphabet& alpha) {
    i64 rows = 0, cols = 0;
    if (!(in >> rows >> cols)) fail("ParseError: expected header \"R C\"");
    if (rows <= 0 || cols <= 0) fail("ParseError: non-positive grid dimensions");
    Grid2D g(cols, rows);
    std::string tok;
    for (i64 r = 0; r < rows; ++r)
        for (i64 c = 0; c < cols; ++c) {
            if (!(in >> tok)) fail("ParseError: not enough grid tokens");
            g.at({c, r}) = alpha.intern(tok);
        }
    return g;
}

void write_grid(std::ostream& out, const Grid2D& g, const Alphabet& alpha) {
    out << g.height << ' ' << g.width << '\n';
    for (i64 r = 0; r < g.height; ++r) {
        for (i64 c = 0; c < g.width; ++c) {
            if (c) out << ' ';
            out << alpha.name(g.at({g.origin.x + c, g.origin.y + r}));
        }
        out << '\n';
    }
}

Grid2D read_grid_file(const std::string& path, Alphabet& alpha) {
    std::ifstream in(path);
    if (!in) fail("ParseError: cannot open " + path);
    return read_grid(in, alpha);
}

}  // namespace m2d
