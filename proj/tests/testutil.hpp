#pragma once

#include <random>
#include <vector>

#include "m2d/grid.hpp"

namespace m2d::test {

inline i64 rnd(std::mt19937_64& rng, i64 bound) {
    return bound <= 1 ? 0 : (i64)(rng() % (u64)bound);
}

inline Grid2D random_grid(std::mt19937_64& rng, i64 w, i64 h, i64 sigma,
                          int wildcard_pct = 0) {
    Grid2D g(w, h);
    for (auto& c : g.cells) {
        if (wildcard_pct > 0 && rnd(rng, 100) < wildcard_pct)
            c = kWildcard;
        else
            c = (Symbol)rnd(rng, sigma);
    }
    return g;
}

inline Lin1D random_lin(std::mt19937_64& rng, i64 len, i64 sigma,
                        int wildcard_pct = 0) {
    Lin1D lin;
    lin.height = 1;
    lin.symbols.resize((size_t)len);
    for (auto& c : lin.symbols) {
        if (wildcard_pct > 0 && rnd(rng, 100) < wildcard_pct)
            c = kWildcard;
        else
            c = (Symbol)rnd(rng, sigma);
    }
    return lin;
}

// direct per-alignment mismatch count, wildcard aware
inline std::vector<std::int64_t> naive_hamming_1d(const Lin1D& p, const Lin1D& t) {
    std::vector<std::int64_t> out((size_t)(t.size() - p.size() + 1), 0);
    for (size_t j = 0; j < out.size(); ++j)
        for (i64 i = 0; i < p.size(); ++i) {
            Symbol a = p.symbols[(size_t)i], b = t.symbols[j + (size_t)i];
            if (a != kWildcard && b != kWildcard && a != b) out[j]++;
        }
    return out;
}

// partition law: domains disjoint, union equals the base, symbols preserved
template <typename Pieces>
inline bool is_partition_of(const Pieces& pieces, const Sparse2D& base) {
    std::vector<std::pair<Point, Symbol>> all;
    for (const auto& p : pieces)
        for (const auto& e : p.str.entries) all.push_back(e);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (all.size() != base.entries.size()) return false;
    for (size_t i = 0; i < all.size(); ++i)
        if (!(all[i].first == base.entries[i].first) ||
            all[i].second != base.entries[i].second)
            return false;
    return true;
}

}  // namespace m2d::test
