#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "m2d/grid.hpp"

namespace m2d {

// Token interning shared between the pattern and the text of one run.
struct Alphabet {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, Symbol> index;

    Symbol intern(const std::string& tok) {
        if (tok == "?") return kWildcard;
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        Symbol s = (Symbol)tokens.size();
        tokens.push_back(tok);
        index.emplace(tok, s);
        return s;
    }
    const std::string& name(Symbol s) const {
        static const std::string wild = "?";
        return s == kWildcard ? wild : tokens[(size_t)s];
    }
    i64 size() const { return (i64)tokens.size(); }
};

// Format: line 1 "R C", then R rows of C whitespace-separated tokens.
// Row r, column c holds the symbol at (x=c, y=r). "?" is the wildcard.
Grid2D read_grid(std::istream& in, Alphabet& alpha);
void write_grid(std::ostream& out, const Grid2D& g, const Alphabet& alpha);

Grid2D read_grid_file(const std::string& path, Alphabet& alpha);

}  // namespace m2d
