#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commrank/bench.hpp"

namespace commrank {

namespace detail {

inline std::vector<Strategy> strategies_from_token(const std::string& token) {
    if (token == "all")
        return {Strategy::random,    Strategy::natural,     Strategy::degree, Strategy::pagerank,
                Strategy::closeness, Strategy::betweenness, Strategy::combined};
    return {strategy_from_token(token)};
}

/// The two benchmark grids behind --paper-tables: n=50 with nei 4..6 and
/// n=100 with nei 7..9; LP with a random-order baseline column, multilevel
/// with a natural-order baseline column.
inline std::vector<BenchConfig> paper_grid(int reps, std::uint64_t seed, TieMode tie) {
    const std::vector<std::pair<int, int>> params = {{50, 4},  {50, 5},  {50, 6},
                                                     {100, 7}, {100, 8}, {100, 9}};
    const std::vector<Strategy> lp_cols = {Strategy::random,      Strategy::degree,
                                           Strategy::pagerank,    Strategy::closeness,
                                           Strategy::betweenness, Strategy::combined};
    const std::vector<Strategy> ml_cols = {Strategy::natural,     Strategy::degree,
                                           Strategy::pagerank,    Strategy::closeness,
                                           Strategy::betweenness, Strategy::combined};
    std::vector<BenchConfig> grid;
    for (auto [n, nei] : params)
        grid.push_back({Method::lp, lp_cols, n, nei, reps, seed, tie, nullptr});
    for (auto [n, nei] : params)
        grid.push_back({Method::multilevel, ml_cols, n, nei, reps, seed, tie, nullptr});
    return grid;
}

}  // namespace detail

/// Benchmark CLI. Returns 0 on success, 1 on usage or input errors, 2 when
/// any cell failed.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Community detection benchmarks with centrality-ranked node orderings"};
    app.name("commrank-bench");

    std::string method = "lp";
    std::string order = "all";
    std::string tie = "stable";
    std::string format = "table";
    std::string graph_file;
    int n = 0;
    int nei = 0;
    int reps = 1000;
    int jobs = 0;
    std::uint64_t seed = 0;
    bool paper_tables = false;

    app.add_option("--method", method, "clustering method (default lp)")
        ->check(CLI::IsMember({"lp", "multilevel"}));
    app.add_option("--order", order, "node ordering strategy, or 'all' (default all)")
        ->check(CLI::IsMember({"random", "natural", "deg", "pag", "clo", "bet", "my", "all"}));
    auto* opt_n = app.add_option("--n", n, "lattice node count");
    auto* opt_nei = app.add_option("--nei", nei, "lattice neighborhood radius");
    app.add_option("--reps", reps, "repetitions per cell (default 1000)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "master seed (default 0)");
    app.add_option("--tie", tie, "tie handling in score orderings (default stable)")
        ->check(CLI::IsMember({"stable", "randomtie"}));
    app.add_option("--format", format, "output format (default table)")
        ->check(CLI::IsMember({"table", "csv"}));
    auto* opt_paper =
        app.add_flag("--paper-tables", paper_tables, "run both full benchmark grids");
    auto* opt_graph =
        app.add_option("--graph", graph_file, "edge-list file; overrides the lattice generator");
    app.add_option("--jobs", jobs, "worker threads across cells (default: all cores)");
    opt_paper->excludes(opt_graph)->excludes(opt_n)->excludes(opt_nei);
    opt_graph->excludes(opt_n)->excludes(opt_nei);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Graph input;
    std::vector<BenchConfig> grid;
    try {
        if (paper_tables) {
            grid = detail::paper_grid(reps, seed, tie_mode_from_token(tie));
        } else if (!graph_file.empty()) {
            std::ifstream file(graph_file);
            if (!file) {
                err << "error: cannot open '" << graph_file << "'\n";
                return 1;
            }
            input = parse_edge_list(file);
            grid.push_back({method_from_token(method), detail::strategies_from_token(order), 0, 0,
                            reps, seed, tie_mode_from_token(tie), &input});
        } else {
            if (opt_n->count() == 0 || opt_nei->count() == 0) {
                err << "error: provide --n and --nei, or --graph, or --paper-tables\n";
                return 1;
            }
            check_lattice_params({n, nei});
            grid.push_back({method_from_token(method), detail::strategies_from_token(order), n,
                            nei, reps, seed, tie_mode_from_token(tie), nullptr});
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    const std::vector<CellOutcome> results = run_suite(grid, jobs);
    if (format == "csv")
        write_csv(results, out);
    else
        write_table(grid, results, out);

    bool any_failed = false;
    std::size_t cursor = 0;
    for (const BenchConfig& config : grid)
        for (Strategy s : config.strategies) {
            const CellOutcome& outcome = results[cursor++];
            if (std::holds_alternative<std::string>(outcome)) {
                any_failed = true;
                err << "cell (method=" << method_token(config.method)
                    << ", order=" << strategy_token(s) << ", n=" << config.n
                    << ", nei=" << config.nei << ") failed: " << std::get<std::string>(outcome)
                    << '\n';
            }
        }
    return any_failed ? 2 : 0;
}

}  // namespace commrank
