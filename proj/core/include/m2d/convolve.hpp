#pragma once

#include <cstdint>
#include <vector>

#include "m2d/grid.hpp"

namespace m2d {

// Exact counting-correlation backend. Counts of 0/1 masks stay below the
// modulus, so a single 64-bit NTT prime recovers them exactly.
struct CorrPlan {
    enum class Backend { ntt64 };
    Backend backend = Backend::ntt64;
    size_t n = 0;                     // transform size, power of two
    std::vector<u64> roots;           // twiddles in bit-reversal layout
    std::vector<u64> roots_inv;

    explicit CorrPlan(size_t transform_size);
    void forward(std::vector<u64>& a) const;
    void inverse(std::vector<u64>& a) const;
};

// result[j] = sum_i b[i] * a[i+j] for j in [|a|-|b|+1]. Exact.
std::vector<std::int64_t> correlate_counts(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b);

// Per alignment j: positions where both symbols are defined non-wildcards
// and differ. Exact, wildcard-aware.
std::vector<std::int64_t> hamming_per_char_1d(const Lin1D& p, const Lin1D& t);

struct ApproxParams {
    i64 eps_num = 1;   // epsilon = eps_num / eps_den > 0
    i64 eps_den = 1;
    int r = 0;         // 0: default ceil((log2 m / eps)^2)
    u64 seed = 0;
};

int default_mapping_count(i64 pattern_size, i64 eps_num, i64 eps_den);

// Randomized projection estimate d~(j) with Ham <= d~ <= (1+eps)*Ham holding
// with high probability (Monte Carlo; deterministic given the seed).
// With at most two distinct symbols the result is exact.
std::vector<std::int64_t> karloff_1d(const Lin1D& p, const Lin1D& t,
                                     const ApproxParams& params);

// Exact Ham(T, P+q) for every q with dom(P+q) inside the bounding box of T.
// Characters of T absent from P are first collapsed to one fresh symbol.
DistMap hamming_per_char_2d(const Grid2D& p, const Grid2D& t);

// (1+eps)-approximation of the 2D distances; exact when the number of
// distinct present characters is at most the mapping count.
DistMap approx_2d(const Grid2D& p, const Grid2D& t, const ApproxParams& params);

// Number of distinct non-wildcard symbols present after collapsing
// text-only characters into one.
i64 effective_sigma(const Grid2D& p, const Grid2D& t);

}  // namespace m2d
