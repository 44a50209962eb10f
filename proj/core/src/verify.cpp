#include "m2d/verify.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "m2d/metrics.hpp"

namespace m2d {

namespace {

// Rank-doubling suffix array with radix passes; values may be arbitrary ints.
std::vector<std::int32_t> suffix_array(const std::vector<Symbol>& s) {
    i64 n = (i64)s.size();
    std::vector<std::int32_t> sa(n), rank(n), tmp(n), cnt;
    {
        // initial ranks by symbol value
        std::vector<std::pair<Symbol, std::int32_t>> order(n);
        for (i64 i = 0; i < n; ++i) order[i] = {s[i], (std::int32_t)i};
        std::sort(order.begin(), order.end());
        std::int32_t r = 0;
        for (i64 i = 0; i < n; ++i) {
            if (i && order[i].first != order[i - 1].first) ++r;
            rank[order[i].second] = r;
            sa[i] = order[i].second;
        }
    }
    for (i64 k = 1; k < n; k <<= 1) {
        i64 classes = 1 + *std::max_element(rank.begin(), rank.end());
        // order by second key (rank[i+k]; suffixes without one come first),
        // then a stable counting sort by first key
        std::vector<std::int32_t> second(n);
        i64 w = 0;
        for (i64 i = n - k; i < n; ++i) second[w++] = (std::int32_t)i;
        for (i64 i = 0; i < n; ++i)
            if (sa[i] >= (std::int32_t)k) second[w++] = sa[i] - (std::int32_t)k;
        cnt.assign((size_t)classes, 0);
        for (i64 i = 0; i < n; ++i) cnt[(size_t)rank[i]]++;
        std::vector<i64> pos((size_t)classes, 0);
        for (i64 c = 1; c < classes; ++c) pos[(size_t)c] = pos[(size_t)c - 1] + cnt[(size_t)c - 1];
        for (i64 i = 0; i < n; ++i) sa[pos[(size_t)rank[second[i]]]++] = second[i];
        // recompute ranks
        tmp[sa[0]] = 0;
        for (i64 i = 1; i < n; ++i) {
            std::int32_t a = sa[i - 1], b = sa[i];
            bool same = rank[a] == rank[b];
            if (same) {
                std::int32_t ra = a + k < n ? rank[a + k] : -1;
                std::int32_t rb = b + k < n ? rank[b + k] : -1;
                same = ra == rb;
            }
            tmp[b] = tmp[a] + (same ? 0 : 1);
        }
        rank = tmp;
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

}  // namespace

LceIndex build_lce(const std::vector<Symbol>& s) {
    if (s.empty()) fail("EmptyString: build_lce");
    for (Symbol c : s)
        if (c == kWildcard) fail("WildcardPresent: build_lce rejects wildcards");
    LceIndex idx;
    idx.seq = s;
    i64 n = (i64)s.size();
    idx.sa = suffix_array(s);
    idx.rank.resize(n);
    for (i64 i = 0; i < n; ++i) idx.rank[idx.sa[i]] = (std::int32_t)i;
    // Kasai
    idx.lcp.assign(n > 1 ? n - 1 : 0, 0);
    i64 h = 0;
    for (i64 i = 0; i < n; ++i) {
        if (idx.rank[i] + 1 < n) {
            i64 j = idx.sa[idx.rank[i] + 1];
            while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
            idx.lcp[idx.rank[i]] = (std::int32_t)h;
            if (h) --h;
        } else {
            h = 0;
        }
    }
    // sparse table
    i64 ln = (i64)idx.lcp.size();
    if (ln > 0) {
        int levels = 1;
        while ((1ll << levels) <= ln) ++levels;
        idx.table.assign(levels, {});
        idx.table[0] = idx.lcp;
        for (int l = 1; l < levels; ++l) {
            i64 span = 1ll << l;
            if (ln - span + 1 <= 0) break;
            idx.table[l].resize(ln - span + 1);
            for (i64 i = 0; i + span <= ln; ++i)
                idx.table[l][i] = std::min(idx.table[l - 1][i],
                                           idx.table[l - 1][i + span / 2]);
        }
    }
    return idx;
}

i64 LceIndex::lce(i64 i, i64 j) const {
    i64 n = size();
    if (i == j) return n - i;
    i64 a = rank[i], b = rank[j];
    if (a > b) std::swap(a, b);
    // min of lcp[a .. b-1]
    i64 len = b - a;
    int l = 63 - __builtin_clzll((u64)len);
    return std::min(table[l][a], table[l][b - (1ll << l)]);
}

std::vector<i64> kangaroo_mismatches(const LceIndex& idx, i64 i, i64 j, i64 len,
                                     i64 cap) {
    if (i < 0 || j < 0 || len < 0 || i + len > idx.size() || j + len > idx.size())
        fail("RangeError: kangaroo_mismatches window out of range");
    std::vector<i64> out;
    i64 off = 0;
    while (off < len && (cap < 0 || (i64)out.size() < cap)) {
        i64 g = idx.lce(i + off, j + off);
        off += g;
        if (off >= len) break;
        Metrics::get().lce_jumps++;  // jump landed on a mismatch
        out.push_back(off);
        ++off;
    }
    return out;
}

KangarooMatcher::KangarooMatcher(const Grid2D& p, const Grid2D& t) {
    if (!p.is_origin_square() || !t.is_origin_square() || p.width > t.width)
        fail("BadShape: verification requires origin squares with m <= n");
    n = t.width;
    m = p.width;
    Symbol fresh = 0;
    for (Symbol c : p.cells) {
        if (c == kWildcard) fail("WildcardPresent: verification rejects wildcards");
        fresh = std::max(fresh, c + 1);
    }
    for (Symbol c : t.cells) {
        if (c == kWildcard) fail("WildcardPresent: verification rejects wildcards");
        fresh = std::max(fresh, c + 1);
    }
    Lin1D lt = linearize(t), lp = linearize(p);
    std::vector<Symbol> cat = lt.symbols;
    cat.push_back(fresh);
    p_lin_start = (i64)cat.size();
    cat.insert(cat.end(), lp.symbols.begin(), lp.symbols.end());
    lin = build_lce(cat);

    // Identifier of the length-m window of column x starting at row j: windows
    // are equal iff the corresponding suffixes share a prefix of length >= m.
    i64 offs = n - m + 1;
    std::vector<i64> starts;
    starts.reserve((size_t)(n * offs + m));
    for (i64 j = 0; j < offs; ++j)
        for (i64 x = 0; x < n; ++x) starts.push_back(x * n + j);
    for (i64 i = 0; i < m; ++i) starts.push_back(p_lin_start + i * m);
    std::vector<i64> order(starts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](i64 a, i64 b) {
        return lin.rank[starts[a]] < lin.rank[starts[b]];
    });
    std::vector<Symbol> id_of(starts.size());
    Symbol next_id = 0;
    for (size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && lin.lce(starts[order[k - 1]], starts[order[k]]) < m) ++next_id;
        id_of[(size_t)order[k]] = next_id;
    }
    // Layout: for each row offset j, the n column-window identifiers, so a
    // placement's m identifiers are contiguous; then a separator and the
    // pattern's m column identifiers.
    std::vector<Symbol> idseq;
    idseq.reserve(starts.size() + 1);
    for (i64 k = 0; k < n * offs; ++k) idseq.push_back(id_of[(size_t)k]);
    idseq.push_back(next_id + 1);
    p_ids_start = (i64)idseq.size();
    for (i64 i = 0; i < m; ++i) idseq.push_back(id_of[(size_t)(n * offs + i)]);
    ids = build_lce(idseq);
}

std::int64_t KangarooMatcher::distance(Point q, i64 cap) const {
    if (q.x < 0 || q.y < 0 || q.x > n - m || q.y > n - m)
        fail("OffsetOutOfRange: verify offset outside [n-m+1]^2");
    i64 pos_t = q.y * n + q.x;
    std::int64_t total = 0;
    i64 col = 0;
    Metrics& metrics = Metrics::get();
    while (col < m) {
        i64 g = ids.lce(pos_t + col, p_ids_start + col);
        col += g;
        if (col >= m) break;
        metrics.lce_jumps++;  // jump landed on a mismatching column
        i64 ta = (q.x + col) * n + q.y;
        i64 pa = p_lin_start + col * m;
        i64 off = 0;
        while (off < m) {
            i64 g2 = lin.lce(ta + off, pa + off);
            off += g2;
            if (off >= m) break;
            metrics.lce_jumps++;  // jump landed on a mismatch
            ++total;
            ++off;
            if (cap >= 0 && total > cap) return cap + 1;
        }
        ++col;
    }
    return total;
}

std::vector<std::int64_t> verify_offsets(const Grid2D& p, const Grid2D& t,
                                         const std::vector<Point>& q) {
    KangarooMatcher km(p, t);
    std::vector<std::int64_t> out;
    out.reserve(q.size());
    for (Point qq : q) out.push_back(km.distance(qq, -1));
    return out;
}

OffsetCounts baseline_kn2(const Grid2D& p, const Grid2D& t, i64 k) {
    KangarooMatcher km(p, t);
    OffsetCounts out(t.width, p.width);
    for (i64 qy = 0; qy < out.side(); ++qy)
        for (i64 qx = 0; qx < out.side(); ++qx)
            out.at(qx, qy) = km.distance({qx, qy}, k);
    return out;
}

}  // namespace m2d
