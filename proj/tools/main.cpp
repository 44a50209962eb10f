#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "m2d/bench.hpp"
#include "m2d/grid_io.hpp"
#include "m2d/pipeline.hpp"
#include "m2d/verify.hpp"

namespace {

using namespace m2d;

// Offsets are reported as "x y d" with x horizontal (column) and y vertical
// (row); grid files are row-major, so cell (x, y) is row y, column x.

int write_counts(const OffsetCounts& counts, i64 k, bool only_matches,
                 const std::string& output) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot open output file " << output << "\n";
            return 2;
        }
        os = &file;
    }
    for (i64 qy = 0; qy < counts.side(); ++qy)
        for (i64 qx = 0; qx < counts.side(); ++qx) {
            auto d = counts.at(qx, qy);
            if (only_matches && d > k) continue;
            (*os) << qx << ' ' << qy << ' ' << d << '\n';
        }
    return 0;
}

struct MatchArgs {
    std::string pattern, text, output, report, algo = "auto";
    i64 k = 0;
    u64 seed = 0;
    bool only_matches = false;
};

int load_pair(const MatchArgs& args, Grid2D& p, Grid2D& t) {
    Alphabet alpha;
    try {
        p = read_grid_file(args.pattern, alpha);
        t = read_grid_file(args.text, alpha);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!p.is_origin_square() || !t.is_origin_square() || p.width > t.width) {
        std::cerr << "error: BadShape: pattern and text must be squares with m <= n\n";
        return 3;
    }
    return 0;
}

int run_match(const MatchArgs& args, bool use_oracle) {
    Grid2D p, t;
    if (int rc = load_pair(args, p, t)) return rc;
    PipelineConfig cfg;
    cfg.k = args.k;
    cfg.seed = args.seed;
    if (args.algo == "naive") cfg.algo = PipelineConfig::Algo::Naive;
    else if (args.algo == "kangaroo") cfg.algo = PipelineConfig::Algo::Kangaroo;
    else if (args.algo == "full") cfg.algo = PipelineConfig::Algo::Full;
    else cfg.algo = PipelineConfig::Algo::Auto;

    RunReport report;
    OffsetCounts counts;
    try {
        counts = use_oracle ? oracle_all_offsets(p, t, std::clamp<i64>(args.k, 0, p.width * p.width))
                            : kmismatch(p, t, cfg, &report);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    if (!args.report.empty() && !use_oracle) {
        std::ofstream rf(args.report);
        rf << report.to_text();
    }
    i64 k = std::clamp<i64>(args.k, 0, p.width * p.width);
    return write_counts(counts, k, args.only_matches, args.output);
}

int run_selftest(u64 seed) {
    std::mt19937_64 rng(seed ^ 0xabcdef);
    int failures = 0, cases = 0;
    for (int it = 0; it < 60; ++it) {
        i64 m = 2 + (i64)(rng() % 14);
        i64 n = m + (i64)(rng() % 24);
        i64 k = (i64)(rng() % 9);
        i64 sigma = 1 + (i64)(rng() % 4) * 3;
        Grid2D t = gen_uniform(n, sigma, rng);
        Grid2D p = gen_uniform(m, sigma, rng);
        PipelineConfig cfg;
        cfg.k = k;
        cfg.seed = rng();
        ++cases;
        OffsetCounts expect = oracle_all_offsets(p, t, k);
        if (!(kmismatch(p, t, cfg) == expect)) ++failures;
        cfg.algo = PipelineConfig::Algo::Kangaroo;
        if (!(kmismatch(p, t, cfg) == expect)) ++failures;
    }
    std::cout << "selftest: " << cases << " cases, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-dimensional pattern matching with k mismatches"};
    app.require_subcommand(1);

    MatchArgs margs;
    CLI::App* match = app.add_subcommand("match", "count mismatches at every offset");
    match->add_option("--pattern", margs.pattern, "pattern grid file")->required();
    match->add_option("--text", margs.text, "text grid file")->required();
    match->add_option("-k", margs.k, "mismatch budget")->required();
    match->add_option("--algo", margs.algo, "auto|naive|kangaroo|full")
        ->check(CLI::IsMember({"auto", "naive", "kangaroo", "full"}));
    match->add_option("--seed", margs.seed, "random seed");
    match->add_flag("--only-matches", margs.only_matches, "print offsets with d <= k");
    match->add_option("--output", margs.output, "write results to a file");
    match->add_option("--report", margs.report, "write run counters to a file");

    MatchArgs oargs;
    CLI::App* oracle = app.add_subcommand("oracle", "reference counting (quadratic)");
    oracle->add_option("--pattern", oargs.pattern, "pattern grid file")->required();
    oracle->add_option("--text", oargs.text, "text grid file")->required();
    oracle->add_option("-k", oargs.k, "mismatch budget")->required();
    oracle->add_flag("--only-matches", oargs.only_matches, "print offsets with d <= k");
    oracle->add_option("--output", oargs.output, "write results to a file");

    std::vector<i64> sizes{64}, ks{4};
    int reps = 1;
    std::string csv;
    u64 bseed = 0;
    CLI::App* bench = app.add_subcommand("bench", "benchmark CSV over generated instances");
    bench->add_option("--sizes", sizes, "text sides (m = n/2)");
    bench->add_option("--ks", ks, "mismatch budgets");
    bench->add_option("--reps", reps, "repetitions");
    bench->add_option("--csv", csv, "output CSV file");
    bench->add_option("--seed", bseed, "random seed");

    u64 sseed = 0;
    CLI::App* selftest = app.add_subcommand("selftest", "randomized oracle check");
    selftest->add_option("--seed", sseed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (match->parsed()) return run_match(margs, false);
    if (oracle->parsed()) return run_match(oargs, true);
    if (selftest->parsed()) return run_selftest(sseed);
    if (bench->parsed()) {
        auto rows = m2d::run_bench(sizes, ks, reps, bseed);
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!csv.empty()) {
            file.open(csv);
            if (!file) {
                std::cerr << "error: cannot open csv file " << csv << "\n";
                return 2;
            }
            os = &file;
        }
        (*os) << m2d::bench_csv_header() << '\n';
        for (const auto& r : rows) (*os) << m2d::bench_csv_line(r) << '\n';
        return 0;
    }
    return 2;
}
