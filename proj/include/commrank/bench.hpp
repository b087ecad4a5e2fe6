#pragma once

#include <atomic>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "commrank/centrality.hpp"
#include "commrank/errors.hpp"
#include "commrank/graph.hpp"
#include "commrank/label_propagation.hpp"
#include "commrank/multilevel.hpp"
#include "commrank/ordering.hpp"
#include "commrank/quality.hpp"
#include "commrank/rng.hpp"
#include "commrank/stats.hpp"

namespace commrank {

enum class Method { lp, multilevel };

inline const char* method_token(Method m) { return m == Method::lp ? "lp" : "multilevel"; }

inline Method method_from_token(const std::string& token) {
    if (token == "lp") return Method::lp;
    if (token == "multilevel") return Method::multilevel;
    throw InvalidInput("unknown method '" + token + "'");
}

enum class OutputFormat { table, csv };

/// One benchmark configuration: a method run with a set of ordering
/// strategies on one lattice (or one input graph), repeated `reps` times
/// with derived seeds.
struct BenchConfig {
    Method method = Method::lp;
    std::vector<Strategy> strategies;
    int n = 0;
    int nei = 0;
    int reps = 1000;
    std::uint64_t master_seed = 0;
    TieMode tie_mode = TieMode::stable;
    /// When set, overrides the generator; n/nei are then reported as the
    /// graph's node count and 0.
    const Graph* graph = nullptr;
};

/// Statistics of one (config, strategy) cell.
struct CellResult {
    Method method;
    Strategy strategy;
    TieMode tie_mode;
    int n;
    int nei;
    std::uint64_t master_seed;
    double mean_q;
    double std_q;
    double min_q;
    double max_q;
    long rep_count;   ///< total repetitions (converged ones = rep_count - nonconverged)
    long nonconverged;
};

namespace detail {

/// Centrality scores a cell may need, computed once per cell (the graph is
/// fixed across repetitions).
struct CellScores {
    std::optional<CentralityScores> degree;
    std::optional<CentralityScores> pagerank;
    std::optional<CentralityScores> closeness;
    std::optional<CentralityScores> betweenness;

    void prepare(const Graph& g, Strategy s) {
        switch (s) {
            case Strategy::degree:
                if (!degree) degree = degree_scores(g);
                break;
            case Strategy::pagerank:
                if (!pagerank) pagerank = pagerank_scores(g);
                break;
            case Strategy::closeness:
                if (!closeness) closeness = closeness_scores(g);
                break;
            case Strategy::betweenness:
                if (!betweenness) betweenness = betweenness_scores(g);
                break;
            case Strategy::combined:
                if (!betweenness) betweenness = betweenness_scores(g);
                if (!closeness) closeness = closeness_scores(g);
                break;
            default:
                break;
        }
    }
};

inline NodeOrder make_order(const Graph& g, Strategy s, TieMode tie, const CellScores& scores,
                            Rng& rng) {
    switch (s) {
        case Strategy::random: return random_order(g.node_count(), rng);
        case Strategy::natural: return natural_order(g.node_count());
        case Strategy::degree: return ascending_order(*scores.degree, tie, rng);
        case Strategy::pagerank: return ascending_order(*scores.pagerank, tie, rng);
        case Strategy::closeness: return ascending_order(*scores.closeness, tie, rng);
        case Strategy::betweenness: return ascending_order(*scores.betweenness, tie, rng);
        case Strategy::combined:
            return ascending_order_combined(*scores.betweenness, *scores.closeness, tie, rng);
    }
    throw InvalidInput("unhandled strategy");
}

}  // namespace detail

/// Per-repetition seed: a documented splitmix64 chain over
/// (master_seed, method, strategy, n, nei, rep). See rng.hpp.
inline std::uint64_t rep_seed(std::uint64_t master, Method method, Strategy strategy, int n,
                              int nei, int rep) {
    return derive_seed({master, static_cast<std::uint64_t>(method),
                        static_cast<std::uint64_t>(strategy), static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(nei), static_cast<std::uint64_t>(rep)});
}

/// Runs one cell: builds the lattice (unless the config carries a graph),
/// derives one seed per repetition, produces the order, runs the method and
/// aggregates modularity statistics in repetition order. Non-convergent LP
/// repetitions are counted and excluded from the statistics.
inline CellResult run_cell(const BenchConfig& config, Strategy strategy) {
    Graph generated;
    const Graph* g = config.graph;
    int n = config.n, nei = config.nei;
    if (g == nullptr) {
        generated = ring_lattice({config.n, config.nei});
        g = &generated;
    } else {
        n = g->node_count();
        nei = 0;
    }

    detail::CellScores scores;
    scores.prepare(*g, strategy);

    RunningStats stats;
    long nonconverged = 0;
    for (int rep = 0; rep < config.reps; ++rep) {
        Rng rng(rep_seed(config.master_seed, config.method, strategy, n, nei, rep));
        const NodeOrder order = detail::make_order(*g, strategy, config.tie_mode, scores, rng);
        try {
            const Partition part = config.method == Method::lp
                                       ? label_propagation(*g, order, rng)
                                       : multilevel(*g, order, rng);
            stats.add(modularity(*g, part));
        } catch (const LpNoConvergence&) {
            ++nonconverged;
        }
    }
    return {.method = config.method,
            .strategy = strategy,
            .tie_mode = config.tie_mode,
            .n = n,
            .nei = nei,
            .master_seed = config.master_seed,
            .mean_q = stats.mean(),
            .std_q = stats.sample_stddev(),
            .min_q = stats.min(),
            .max_q = stats.max(),
            .rep_count = config.reps,
            .nonconverged = nonconverged};
}

/// A cell that failed carries its error text instead of statistics.
using CellOutcome = std::variant<CellResult, std::string>;

/// Runs every (config, strategy) cell of the grid, optionally on several
/// worker threads. Cells are independent and individually seeded, so the
/// result vector (in grid order) does not depend on the number of workers;
/// per-cell errors are captured without aborting the rest.
inline std::vector<CellOutcome> run_suite(const std::vector<BenchConfig>& grid, int jobs = 0) {
    struct Task {
        const BenchConfig* config;
        Strategy strategy;
    };
    std::vector<Task> tasks;
    for (const BenchConfig& config : grid)
        for (Strategy s : config.strategies) tasks.push_back({&config, s});

    std::vector<CellOutcome> results(tasks.size());
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                results[i] = run_cell(*tasks[i].config, tasks[i].strategy);
            } catch (const std::exception& e) {
                results[i] = std::string(e.what());
            }
        }
    };
    if (jobs == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> workers;
        const int spawn = std::min<int>(jobs, static_cast<int>(tasks.size()));
        workers.reserve(static_cast<std::size_t>(spawn));
        for (int t = 0; t < spawn; ++t)
            workers.push_back(std::async(std::launch::async, worker));
        for (auto& w : workers) w.get();
    }
    return results;
}

namespace detail {

inline std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// CSV schema: method,order,tie,n,nei,reps,seed,mean_q,std_q,min_q,max_q,nonconverged
inline void write_csv(const std::vector<CellOutcome>& results, std::ostream& out) {
    out << "method,order,tie,n,nei,reps,seed,mean_q,std_q,min_q,max_q,nonconverged\n";
    for (const CellOutcome& outcome : results) {
        if (!std::holds_alternative<CellResult>(outcome)) continue;
        const CellResult& r = std::get<CellResult>(outcome);
        out << method_token(r.method) << ',' << strategy_token(r.strategy) << ','
            << tie_mode_token(r.tie_mode) << ',' << r.n << ',' << r.nei << ',' << r.rep_count
            << ',' << r.master_seed << ',' << detail::format_full(r.mean_q) << ','
            << detail::format_full(r.std_q) << ',' << detail::format_full(r.min_q) << ','
            << detail::format_full(r.max_q) << ',' << r.nonconverged << '\n';
    }
}

/// Human-readable tables: one row per (n, nei), one column per strategy,
/// means at the 4-decimal precision the source tables use. Consecutive
/// configs that share method, repetitions, seed, tie mode and strategy set
/// are rendered as rows of one table.
inline void write_table(const std::vector<BenchConfig>& grid,
                        const std::vector<CellOutcome>& results, std::ostream& out) {
    auto same_block = [](const BenchConfig& a, const BenchConfig& b) {
        return a.method == b.method && a.reps == b.reps && a.master_seed == b.master_seed &&
               a.tie_mode == b.tie_mode && a.strategies == b.strategies;
    };
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const BenchConfig& config = grid[i];
        if (i == 0 || !same_block(grid[i - 1], config)) {
            if (i > 0) out << '\n';
            out << "# method=" << method_token(config.method) << " reps=" << config.reps
                << " seed=" << config.master_seed << " tie=" << tie_mode_token(config.tie_mode)
                << '\n';
            out << "# lattice p=0 is deterministic: means are over " << config.reps
                << " seeded repetitions of the algorithm, not over distinct graphs\n";
            out << "parameters";
            for (Strategy s : config.strategies) out << '\t' << strategy_token(s) << " ord.";
            out << '\n';
        }
        out << "n=" << config.n << ", nei=" << config.nei;
        for (std::size_t c = 0; c < config.strategies.size(); ++c, ++cursor) {
            const CellOutcome& outcome = results[cursor];
            if (std::holds_alternative<CellResult>(outcome))
                out << '\t' << detail::format_fixed(std::get<CellResult>(outcome).mean_q, 4);
            else
                out << '\t' << "error";
        }
        out << '\n';
    }
}

}  // namespace commrank
