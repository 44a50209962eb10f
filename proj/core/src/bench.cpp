#include "m2d/bench.hpp"

#include <algorithm>
#include <sstream>

namespace m2d {

Grid2D gen_uniform(i64 side, i64 sigma, std::mt19937_64& rng) {
    Grid2D g(side, side);
    for (auto& c : g.cells) c = (Symbol)rnd_below(rng, std::max<i64>(1, sigma));
    return g;
}

std::pair<Grid2D, Grid2D> gen_planted_periodic(i64 n, i64 m, i64 k,
                                               std::mt19937_64& rng) {
    auto base = [](Point u) { return (Symbol)(((u.x + u.y) % 2 + 2) % 2); };
    Grid2D t(n, n);
    for (i64 x = 0; x < n; ++x)
        for (i64 y = 0; y < n; ++y) t.at({x, y}) = base({x, y});
    Grid2D p(m, m);
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y) p.at({x, y}) = base({x, y});
    i64 flips = std::min<i64>(n * n / 4, 2 * k * std::max<i64>(1, (n / m) * (n / m)));
    for (i64 i = 0; i < flips; ++i) {
        Point u{rnd_below(rng, n), rnd_below(rng, n)};
        t.at(u) = (Symbol)(1 - t.at(u));
    }
    return {p, t};
}

PlantedInstance gen_planted_occurrence(i64 n, i64 m, i64 k, i64 sigma,
                                       std::mt19937_64& rng) {
    PlantedInstance inst;
    inst.text = gen_uniform(n, std::max<i64>(2, sigma), rng);
    inst.offset = {rnd_below(rng, n - m + 1), rnd_below(rng, n - m + 1)};
    inst.pattern = Grid2D(m, m);
    for (i64 x = 0; x < m; ++x)
        for (i64 y = 0; y < m; ++y)
            inst.pattern.at({x, y}) = inst.text.at(inst.offset + Point{x, y});
    i64 noise = k > 0 ? rnd_below(rng, k + 1) : 0;
    for (i64 i = 0; i < noise; ++i) {
        Point u{rnd_below(rng, m), rnd_below(rng, m)};
        inst.pattern.at(u) = (Symbol)rnd_below(rng, std::max<i64>(2, sigma));
    }
    return inst;
}

std::string bench_csv_header() {
    return "n,m,k,algo,millis,q_max,branch,generator,rep,conv_cells,dp_cells,"
           "box_ops,lce_jumps";
}

std::string bench_csv_line(const BenchRow& r) {
    std::ostringstream os;
    os << r.n << ',' << r.m << ',' << r.k << ',' << r.algo << ',' << r.millis << ','
       << r.q_max << ',' << r.branch << ',' << r.generator << ',' << r.rep << ','
       << r.conv_cells << ',' << r.dp_cells << ',' << r.box_ops << ','
       << r.lce_jumps;
    return os.str();
}

BenchRow run_bench_case(const Grid2D& p, const Grid2D& t, i64 k,
                        PipelineConfig::Algo algo, const std::string& algo_name,
                        const std::string& generator, int rep, u64 seed) {
    PipelineConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.algo = algo;
    RunReport report;
    kmismatch(p, t, cfg, &report);
    BenchRow row;
    row.n = t.width;
    row.m = p.width;
    row.k = k;
    row.algo = algo_name;
    row.millis = report.ms_total;
    row.q_max = report.q_max;
    row.branch = report.branch_full > 0
                     ? (report.branch_kangaroo > 0 ? "mixed" : "full")
                     : "kangaroo";
    if (report.algo == "naive") row.branch = "naive";
    row.generator = generator;
    row.rep = rep;
    row.conv_cells = report.work.conv_cells;
    row.dp_cells = report.work.dp_cells;
    row.box_ops = report.work.box_ops;
    row.lce_jumps = report.work.lce_jumps;
    return row;
}

std::vector<BenchRow> run_bench(const std::vector<i64>& sizes,
                                const std::vector<i64>& ks, int reps, u64 seed) {
    std::vector<BenchRow> rows;
    for (i64 n : sizes)
        for (i64 k : ks)
            for (int rep = 0; rep < reps; ++rep) {
                i64 m = std::max<i64>(2, n / 2);
                std::mt19937_64 rng(mix_seed(seed, (u64)n, (u64)(k * 1000 + rep)));
                struct Inst {
                    std::string name;
                    Grid2D p, t;
                };
                std::vector<Inst> insts;
                {
                    Grid2D t = gen_uniform(n, 4, rng);
                    Grid2D p = gen_uniform(m, 4, rng);
                    insts.push_back({"uniform", std::move(p), std::move(t)});
                }
                {
                    auto [p, t] = gen_planted_periodic(n, m, k, rng);
                    insts.push_back({"planted-periodic", std::move(p), std::move(t)});
                }
                {
                    PlantedInstance pi = gen_planted_occurrence(n, m, k, 4, rng);
                    insts.push_back({"planted-occurrence", std::move(pi.pattern),
                                     std::move(pi.text)});
                }
                for (const Inst& inst : insts) {
                    if (n <= 128)
                        rows.push_back(run_bench_case(inst.p, inst.t, k,
                                                      PipelineConfig::Algo::Naive,
                                                      "naive", inst.name, rep, seed));
                    rows.push_back(run_bench_case(inst.p, inst.t, k,
                                                  PipelineConfig::Algo::Kangaroo,
                                                  "kangaroo", inst.name, rep, seed));
                    rows.push_back(run_bench_case(inst.p, inst.t, k,
                                                  PipelineConfig::Algo::Full, "full",
                                                  inst.name, rep, seed));
                }
            }
    return rows;
}

}  // namespace m2d
