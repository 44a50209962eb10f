#include "m2d/convolve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "m2d/metrics.hpp"

namespace m2d {

namespace {

constexpr u64 kPrime = 4179340454199820289ULL;  // 29 * 2^57 + 1
constexpr u64 kRoot = 3;

u64 mulmod(u64 a, u64 b) { return (u64)((unsigned __int128)a * b % kPrime); }

u64 powmod(u64 b, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, b = mulmod(b, b))
        if (e & 1) r = mulmod(r, b);
    return r;
}

}  // namespace

CorrPlan::CorrPlan(size_t transform_size) : n(transform_size) {
    assert(n && (n & (n - 1)) == 0 && n <= (1ull << 57));
    // roots[len/2 + j] = w_len^j for each level, both directions
    roots.resize(n);
    roots_inv.resize(n);
    roots[0] = roots_inv[0] = 1;
    for (size_t len = 2; len <= n; len <<= 1) {
        u64 w = powmod(kRoot, (kPrime - 1) / len);
        u64 wi = powmod(w, kPrime - 2);
        u64 cw = 1, cwi = 1;
        for (size_t j = 0; j < len / 2; ++j) {
            roots[len / 2 + j] = cw;
            roots_inv[len / 2 + j] = cwi;
            cw = mulmod(cw, w);
            cwi = mulmod(cwi, wi);
        }
    }
}

namespace {

void transform(const CorrPlan& plan, std::vector<u64>& a, bool invert) {
    size_t n = a.size();
    assert(n == plan.n);
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const std::vector<u64>& tw = invert ? plan.roots_inv : plan.roots;
    for (size_t len = 2; len <= n; len <<= 1) {
        const u64* w = tw.data() + len / 2;
        for (size_t i = 0; i < n; i += len)
            for (size_t j = 0; j < len / 2; ++j) {
                u64 u = a[i + j], v = mulmod(a[i + j + len / 2], w[j]);
                a[i + j] = u + v < kPrime ? u + v : u + v - kPrime;
                a[i + j + len / 2] = u >= v ? u - v : u + kPrime - v;
            }
    }
    if (invert) {
        u64 ninv = powmod((u64)n, kPrime - 2);
        for (auto& x : a) x = mulmod(x, ninv);
    }
}

const CorrPlan& plan_for(size_t n) {
    thread_local std::map<size_t, CorrPlan> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, CorrPlan(n)).first;
    return it->second;
}

}  // namespace

void CorrPlan::forward(std::vector<u64>& a) const { transform(*this, a, false); }
void CorrPlan::inverse(std::vector<u64>& a) const { transform(*this, a, true); }

std::vector<std::int64_t> correlate_counts(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size() || b.empty())
        fail("SizeError: correlate_counts requires |a| >= |b| >= 1");
    size_t out_len = a.size() - b.size() + 1;
    Metrics::get().correlations++;
    if ((u64)a.size() * b.size() <= (1u << 14)) {
        std::vector<std::int64_t> res(out_len, 0);
        for (size_t j = 0; j < out_len; ++j) {
            std::int64_t s = 0;
            for (size_t i = 0; i < b.size(); ++i) s += (std::int64_t)b[i] * a[i + j];
            res[j] = s;
        }
        return res;
    }
    size_t need = a.size() + b.size() - 1;
    size_t n = 1;
    while (n < need) n <<= 1;
    Metrics::get().conv_cells += 3 * n;
    const CorrPlan& plan = plan_for(n);
    std::vector<u64> fa(n, 0), fb(n, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) fb[b.size() - 1 - i] = b[i];  // reversed
    plan.forward(fa);
    plan.forward(fb);
    for (size_t i = 0; i < n; ++i) fa[i] = mulmod(fa[i], fb[i]);
    plan.inverse(fa);
    std::vector<std::int64_t> res(out_len);
    for (size_t j = 0; j < out_len; ++j) res[j] = (std::int64_t)fa[b.size() - 1 + j];
    return res;
}

namespace {

std::vector<std::uint32_t> mask_of(const Lin1D& s, Symbol c) {
    std::vector<std::uint32_t> m(s.symbols.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = s.symbols[i] == c;
    return m;
}

std::vector<std::uint32_t> mask_defined(const Lin1D& s) {
    std::vector<std::uint32_t> m(s.symbols.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = s.symbols[i] != kWildcard;
    return m;
}

}  // namespace

std::vector<std::int64_t> hamming_per_char_1d(const Lin1D& p, const Lin1D& t) {
    if (p.size() == 0 || t.size() < p.size())
        fail("SizeError: hamming_per_char_1d requires |t| >= |p| >= 1");
    auto res = correlate_counts(mask_defined(t), mask_defined(p));
    std::set<Symbol> in_p(p.symbols.begin(), p.symbols.end());
    std::set<Symbol> in_t(t.symbols.begin(), t.symbols.end());
    for (Symbol c : in_p) {
        if (c == kWildcard || !in_t.count(c)) continue;
        auto match = correlate_counts(mask_of(t, c), mask_of(p, c));
        for (size_t j = 0; j < res.size(); ++j) res[j] -= match[j];
    }
    return res;
}

int default_mapping_count(i64 pattern_size, i64 eps_num, i64 eps_den) {
    i64 lg = 0;
    while ((1ll << lg) < pattern_size) ++lg;
    lg = std::max<i64>(lg, 1);
    i64 num = lg * eps_den;
    return (int)ceil_div(num * num, eps_num * eps_num);
}

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int projected_bit(u64 seed, int mapping, Symbol sym) {
    return (int)(splitmix64(seed ^ splitmix64((u64)mapping * 0x100000001b3ULL ^
                                              (u64)(std::uint32_t)sym)) &
                 1);
}

Lin1D project(const Lin1D& s, u64 seed, int mapping) {
    Lin1D r;
    r.height = s.height;
    r.symbols.resize(s.symbols.size());
    for (size_t i = 0; i < s.symbols.size(); ++i) {
        Symbol c = s.symbols[i];
        r.symbols[i] = c == kWildcard ? kWildcard : projected_bit(seed, mapping, c);
    }
    return r;
}

}  // namespace

std::vector<std::int64_t> karloff_1d(const Lin1D& p, const Lin1D& t,
                                     const ApproxParams& params) {
    if (p.size() == 0 || t.size() < p.size())
        fail("SizeError: karloff_1d requires |t| >= |p| >= 1");
    std::set<Symbol> syms(p.symbols.begin(), p.symbols.end());
    syms.insert(t.symbols.begin(), t.symbols.end());
    syms.erase(kWildcard);
    if (syms.size() <= 2) return hamming_per_char_1d(p, t);

    int r = params.r > 0 ? params.r
                         : default_mapping_count(p.size(), params.eps_num, params.eps_den);
    std::vector<std::int64_t> acc(t.size() - p.size() + 1, 0);
    for (int i = 0; i < r; ++i) {
        Lin1D pp = project(p, params.seed, i);
        Lin1D tt = project(t, params.seed, i);
        auto d = hamming_per_char_1d(pp, tt);
        for (size_t j = 0; j < acc.size(); ++j) acc[j] += d[j];
    }
    // The unbiased estimate is 2*acc/r; the extra (1+eps/2) factor makes the
    // lower bound Ham <= d~ fail only with small probability.
    std::vector<std::int64_t> res(acc.size());
    i64 num = 2 * params.eps_den + params.eps_num;
    i64 den = (i64)r * params.eps_den;
    for (size_t j = 0; j < res.size(); ++j)
        res[j] = ceil_div128((i128)acc[j] * num, den);
    return res;
}

i64 effective_sigma(const Grid2D& p, const Grid2D& t) {
    std::set<Symbol> in_p(p.cells.begin(), p.cells.end());
    in_p.erase(kWildcard);
    bool extra = false;
    for (Symbol c : t.cells)
        if (c != kWildcard && !in_p.count(c)) { extra = true; break; }
    return (i64)in_p.size() + (extra ? 1 : 0);
}

namespace {

Symbol max_symbol(const Grid2D& g) {
    Symbol mx = -1;
    for (Symbol c : g.cells)
        if (c != kWildcard) mx = std::max(mx, c);
    return mx;
}

Grid2D collapse_text_only(const Grid2D& p, const Grid2D& t) {
    std::set<Symbol> in_p(p.cells.begin(), p.cells.end());
    Symbol fresh = std::max(max_symbol(p), max_symbol(t)) + 1;
    Grid2D r = t;
    for (Symbol& c : r.cells)
        if (c != kWildcard && !in_p.count(c)) c = fresh;
    return r;
}

DistMap map_from_1d(const PadEmbed& pe, const std::vector<std::int64_t>& d1) {
    DistMap out;
    out.base = pe.base;
    out.w = pe.offs_w;
    out.h = pe.offs_h;
    out.v.resize((size_t)(out.w * out.h));
    for (i64 qx = 0; qx < out.w; ++qx)
        for (i64 qy = 0; qy < out.h; ++qy)
            out.v[(size_t)(qy * out.w + qx)] = d1[(size_t)(qx * pe.lin_t.height + qy)];
    return out;
}

}  // namespace

DistMap hamming_per_char_2d(const Grid2D& p, const Grid2D& t) {
    if (p.size() == 0 || t.size() == 0) fail("EmptyString: hamming_per_char_2d");
    if (p.width > t.width || p.height > t.height)
        fail("SizeError: pattern exceeds text box");
    Grid2D tc = collapse_text_only(p, t);
    PadEmbed pe = pad_embed(p, tc);
    auto d1 = hamming_per_char_1d(pe.lin_p, pe.lin_t);
    return map_from_1d(pe, d1);
}

DistMap approx_2d(const Grid2D& p, const Grid2D& t, const ApproxParams& params) {
    if (!p.is_origin_square() || !t.is_origin_square() || p.width > t.width)
        fail("BadShape: approx_2d requires origin squares with m <= n");
    int r = params.r > 0 ? params.r
                         : default_mapping_count(p.width, params.eps_num, params.eps_den);
    if (effective_sigma(p, t) <= r) return hamming_per_char_2d(p, t);
    Grid2D tc = collapse_text_only(p, t);
    PadEmbed pe = pad_embed(p, tc);
    ApproxParams eff = params;
    eff.r = r;
    auto d1 = karloff_1d(pe.lin_p, pe.lin_t, eff);
    return map_from_1d(pe, d1);
}

}  // namespace m2d
