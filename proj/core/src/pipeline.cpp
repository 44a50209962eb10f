#include "m2d/pipeline.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>

#include "m2d/convolve.hpp"
#include "m2d/densecount.hpp"
#include "m2d/periods.hpp"
#include "m2d/sparsecount.hpp"
#include "m2d/textpart.hpp"
#include "m2d/tiling.hpp"
#include "m2d/verify.hpp"

namespace m2d {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

struct PhaseTimer {
    double* slot;
    double start;
    explicit PhaseTimer(double* s) : slot(s), start(now_ms()) {}
    ~PhaseTimer() {
        if (slot) *slot += now_ms() - start;
    }
};

u64 splitmix(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// largest L >= 1 with L * k^(3/4) <= m, i.e. L^4 * k^3 <= m^4
i64 partition_grid_size(i64 m, i64 k) {
    if (k <= 1) return std::max<i64>(1, m);
    i64 lo = 1, hi = m;
    i128 m4 = (i128)m * m * m * m;
    i128 k3 = (i128)k * k * k;
    while (lo < hi) {
        i64 mid = (lo + hi + 1) / 2;
        i128 l4 = (i128)mid * mid * mid * mid;
        if (l4 <= m4 / k3 && l4 * k3 <= m4)
            lo = mid;
        else
            hi = mid - 1;
    }
    return std::max<i64>(1, lo);
}

Grid2D window_of(const Grid2D& t, Point origin, i64 side) {
    Grid2D w(side, side);
    for (i64 x = 0; x < side; ++x)
        for (i64 y = 0; y < side; ++y)
            w.at({x, y}) = t.at({origin.x + x, origin.y + y});
    return w;
}

bool has_wildcard(const Grid2D& g) {
    for (Symbol c : g.cells)
        if (c == kWildcard) return true;
    return false;
}

OffsetCounts counts_from(const std::vector<std::int64_t>& vals, i64 n, i64 m, i64 k) {
    OffsetCounts out(n, m);
    for (size_t i = 0; i < vals.size(); ++i)
        out.counts[i] = (std::int64_t)std::min<std::int64_t>(vals[i], k + 1);
    return out;
}

}  // namespace

u64 mix_seed(u64 seed, u64 a, u64 b) {
    return splitmix(seed ^ splitmix(a * 0x9e3779b97f4a7c15ULL ^ b));
}

TextCover cover_text(i64 n, i64 m) {
    if (m > n || m < 1) fail("BadShape: cover_text requires 1 <= m <= n");
    TextCover cover;
    i64 np = 2 * ((3 * m) / 4);
    if (np > n) np = 2 * (n / 2);
    if (np < m) np = n;  // degenerate n == m with odd m
    cover.nprime = np;
    i64 stride = np - m + 1;
    std::vector<i64> starts;
    for (i64 o = 0;; o += stride) {
        if (o >= n - np) {
            starts.push_back(n - np);
            break;
        }
        starts.push_back(o);
    }
    for (i64 oy : starts)
        for (i64 ox : starts) cover.origins.push_back({ox, oy});
    return cover;
}

OffsetCounts match_window(const Grid2D& p, const Grid2D& tw, i64 k,
                          const PipelineConfig& cfg, u64 window_seed,
                          RunReport* report) {
    if (!p.is_origin_square() || !tw.is_origin_square() || p.width > tw.width)
        fail("BadShape: match_window requires origin squares with m <= n");
    i64 m = p.width, np = tw.width, side = np - m + 1;

    std::vector<Point> q;
    {
        PhaseTimer pt(report ? &report->ms_approx : nullptr);
        ApproxParams ap{cfg.eps_num, cfg.eps_den, 0, window_seed};
        DistMap dm = approx_2d(p, tw, ap);
        for (i64 qy = 0; qy < side; ++qy)
            for (i64 qx = 0; qx < side; ++qx)
                if (dm.at({qx, qy}) <= 2 * k) q.push_back({qx, qy});
    }
    if (report) {
        report->q_total += (i64)q.size();
        report->q_max = std::max(report->q_max, (i64)q.size());
    }

    i64 ell = np - m;
    bool kangaroo_ok = true;  // always applicable
    bool can_full = ell >= 1 && (i64)q.size() > 16 * ell;
    bool want_full;
    if (cfg.algo == PipelineConfig::Algo::Full)
        want_full = can_full;
    else
        want_full = k > 0 && (i64)q.size() > 8 * m + m * m / k && can_full;
    (void)kangaroo_ok;

    OffsetCounts out(np, m);
    for (auto& c : out.counts) c = k + 1;

    if (!want_full) {
        PhaseTimer pt(report ? &report->ms_verify : nullptr);
        if (report) report->branch_kangaroo++;
        if (!q.empty()) {
            KangarooMatcher km(p, tw);
            for (Point qq : q) out.at(qq.x, qq.y) = km.distance(qq, k);
        }
        return out;
    }

    if (report) report->branch_full++;
    PeriodPair pp;
    {
        PhaseTimer pt(report ? &report->ms_periods : nullptr);
        pp = get_periods(q, ell);
    }
    Lattice lat(pp.phi, pp.psi);

    PatternPieces pieces;
    {
        PhaseTimer pt(report ? &report->ms_pattern : nullptr);
        pieces = build_pattern_pieces(lat, tile_decompose(lat, tile_from_grid(lat, p), k), m);
    }
    if (report)
        report->pattern_pieces_max =
            std::max(report->pattern_pieces_max, (i64)pieces.pieces.size());

    TextDecomposition td;
    ActiveText at;
    {
        PhaseTimer pt(report ? &report->ms_text : nullptr);
        at = build_active(tw, q, m);
        td = text_decompose(at, lat, partition_grid_size(m, k), k);
    }
    if (report) {
        report->text_pieces_total += (i64)td.pieces.size();
        if (td.trivial) report->trivial_text_partitions++;
    }

    std::vector<std::int64_t> sparse_part;
    {
        PhaseTimer pt(report ? &report->ms_sparse : nullptr);
        sparse_part = sparse_distances(pieces, td.pieces, np);
    }
    std::vector<std::int64_t> dense_part;
    {
        PhaseTimer pt(report ? &report->ms_dense : nullptr);
        dense_part = dense_distances(p, td.peripheral, at, td.d_peripheral, pieces, k);
    }
    for (Point qq : q) {
        std::int64_t v = sparse_part[(size_t)(qq.y * side + qq.x)] +
                         dense_part[(size_t)(qq.y * side + qq.x)];
        out.at(qq.x, qq.y) = std::min<std::int64_t>(v, k + 1);
    }
    return out;
}

OffsetCounts kmismatch(const Grid2D& p, const Grid2D& t, const PipelineConfig& cfg,
                       RunReport* report) {
    if (!p.is_origin_square() || !t.is_origin_square() || p.width > t.width)
        fail("BadShape: kmismatch requires origin squares with m <= n");
    i64 m = p.width, n = t.width;
    i64 k = std::clamp<i64>(cfg.k, 0, m * m);
    double start = now_ms();
    RunReport local;
    RunReport& rep = report ? *report : local;
    rep = RunReport{};
    rep.n = n;
    rep.m = m;
    rep.k = k;

    OffsetCounts out(n, m);
    auto finish = [&](OffsetCounts&& r, const char* algo) {
        rep.algo = algo;
        rep.ms_total = now_ms() - start;
        rep.work = Metrics::get();
        return std::move(r);
    };
    Metrics::get().reset();

    if (has_wildcard(p) || has_wildcard(t)) {
        // wildcards bypass the periodicity machinery; exact counting instead
        DistMap dm = hamming_per_char_2d(p, t);
        for (i64 qy = 0; qy < out.side(); ++qy)
            for (i64 qx = 0; qx < out.side(); ++qx)
                out.at(qx, qy) = std::min<std::int64_t>(dm.at({qx, qy}), k + 1);
        return finish(std::move(out), "convolve");
    }

    if (cfg.algo == PipelineConfig::Algo::Naive)
        return finish(oracle_all_offsets(p, t, k), "naive");
    if (cfg.algo == PipelineConfig::Algo::Kangaroo) {
        OffsetCounts r = baseline_kn2(p, t, k);
        rep.branch_kangaroo = 1;
        return finish(std::move(r), "kangaroo");
    }
    if (cfg.algo == PipelineConfig::Algo::Auto &&
        (m < 16 || m * m <= 8 * m + m * m / std::max<i64>(k, 1))) {
        OffsetCounts r = baseline_kn2(p, t, k);
        rep.branch_kangaroo = 1;
        return finish(std::move(r), "kangaroo");
    }

    TextCover cover = cover_text(n, m);
    rep.windows = (i64)cover.origins.size();
    rep.nprime = cover.nprime;
    std::vector<std::int8_t> seen((size_t)(out.side() * out.side()), 0);
    for (Point o : cover.origins) {
        Grid2D tw = window_of(t, o, cover.nprime);
        u64 wseed = mix_seed(cfg.seed, (u64)o.x, (u64)o.y);
        OffsetCounts wout = match_window(p, tw, k, cfg, wseed, &rep);
        for (i64 qy = 0; qy < wout.side(); ++qy)
            for (i64 qx = 0; qx < wout.side(); ++qx) {
                i64 gx = o.x + qx, gy = o.y + qy;
                if (gx > n - m || gy > n - m) continue;
                size_t gi = (size_t)(gy * out.side() + gx);
                std::int64_t v = wout.at(qx, qy);
                if (!seen[gi]) {
                    seen[gi] = 1;
                    out.counts[gi] = v;
                } else if (out.counts[gi] != v) {
                    // a candidate missed by one window's filter; the smaller
                    // value is the exactly verified one
                    rep.merge_disagreements++;
                    out.counts[gi] = std::min(out.counts[gi], v);
                }
            }
    }
    for (std::int8_t s : seen)
        if (!s) fail("InternalError: window cover left an offset unset");
    return finish(std::move(out), cfg.algo == PipelineConfig::Algo::Full ? "full" : "auto");
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "n=" << n << "\nm=" << m << "\nk=" << k << "\nalgo=" << algo
       << "\nwindows=" << windows << "\nnprime=" << nprime
       << "\nbranch_kangaroo=" << branch_kangaroo << "\nbranch_full=" << branch_full
       << "\nq_total=" << q_total << "\nq_max=" << q_max
       << "\npattern_pieces_max=" << pattern_pieces_max
       << "\ntext_pieces_total=" << text_pieces_total
       << "\ntrivial_text_partitions=" << trivial_text_partitions
       << "\nmerge_disagreements=" << merge_disagreements
       << "\nms_total=" << ms_total << "\nms_approx=" << ms_approx
       << "\nms_verify=" << ms_verify << "\nms_periods=" << ms_periods
       << "\nms_pattern=" << ms_pattern << "\nms_text=" << ms_text
       << "\nms_sparse=" << ms_sparse << "\nms_dense=" << ms_dense
       << "\nconv_cells=" << work.conv_cells << "\ncorrelations=" << work.correlations
       << "\ndp_cells=" << work.dp_cells << "\nbox_ops=" << work.box_ops
       << "\nlce_jumps=" << work.lce_jumps << "\n";
    return os.str();
}

}  // namespace m2d
