#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "commrank/errors.hpp"
#include "commrank/graph.hpp"

namespace commrank {

enum class Measure { degree, pagerank, closeness, betweenness, combined };

/// One real-valued score per node for a single centrality measure.
struct CentralityScores {
    Measure measure;
    std::vector<double> values;
};

/// Weighted degree: values[v] = strength(v).
inline CentralityScores degree_scores(const Graph& g) {
    CentralityScores s{Measure::degree, {}};
    s.values.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) s.values.push_back(g.strength(v));
    return s;
}

struct PagerankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;
    int max_iterations = 1000;
};

/// Weighted PageRank by power iteration. A walker at u follows edge (u,v)
/// with probability w(u,v)/strength(u); isolated nodes spread their mass
/// uniformly. Iterates until the max absolute per-node change is within
/// tolerance; the result sums to 1.
inline CentralityScores pagerank_scores(const Graph& g, const PagerankOptions& opt = {}) {
    const int n = g.node_count();
    CentralityScores s{Measure::pagerank, std::vector<double>(static_cast<std::size_t>(n))};
    if (n == 0) return s;

    std::vector<double> pr(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> next(static_cast<std::size_t>(n));
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        double dangling = 0.0;
        for (int v = 0; v < n; ++v)
            if (g.strength(v) == 0.0) dangling += pr[static_cast<std::size_t>(v)];
        const double base = (1.0 - opt.damping) / n + opt.damping * dangling / n;
        std::fill(next.begin(), next.end(), base);
        for (int v = 0; v < n; ++v) {
            for (const Neighbor& nb : g.neighbors(v)) {
                // a self-loop keeps the walker in place; it carries weight 2w
                // in strength, so it must carry 2w here as well
                const double w = nb.id == v ? 2.0 * nb.weight : nb.weight;
                next[static_cast<std::size_t>(nb.id)] +=
                    opt.damping * pr[static_cast<std::size_t>(v)] * w / g.strength(v);
            }
        }
        double delta = 0.0;
        for (std::size_t i = 0; i < pr.size(); ++i)
            delta = std::max(delta, std::abs(next[i] - pr[i]));
        pr.swap(next);
        if (delta <= opt.tolerance) {
            s.values = std::move(pr);
            return s;
        }
    }
    throw NoConvergence("pagerank did not converge in " + std::to_string(opt.max_iterations) +
                        " iterations");
}

/// Single-source shortest-path lengths where edge e has length 1/w_e.
/// Unreachable nodes get +infinity.
inline std::vector<double> shortest_distances(const Graph& g, int src) {
    g.check_node(src);
    const int n = g.node_count();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), inf);
    std::vector<bool> settled(static_cast<std::size_t>(n), false);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[static_cast<std::size_t>(src)] = 0.0;
    queue.push({0.0, src});
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (settled[static_cast<std::size_t>(v)]) continue;
        settled[static_cast<std::size_t>(v)] = true;
        for (const Neighbor& nb : g.neighbors(v)) {
            if (nb.id == v) continue;
            const double nd = d + 1.0 / nb.weight;
            if (nd < dist[static_cast<std::size_t>(nb.id)]) {
                dist[static_cast<std::size_t>(nb.id)] = nd;
                queue.push({nd, nb.id});
            }
        }
    }
    return dist;
}

/// Closeness: values[v] = 1 / sum of shortest-path distances from v to all
/// other nodes. Defined only on connected graphs with n >= 2.
inline CentralityScores closeness_scores(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw DegenerateGraph("closeness needs at least 2 nodes");
    CentralityScores s{Measure::closeness, std::vector<double>(static_cast<std::size_t>(n))};
    for (int v = 0; v < n; ++v) {
        const std::vector<double> dist = shortest_distances(g, v);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            if (i == v) continue;
            if (std::isinf(dist[static_cast<std::size_t>(i)]))
                throw DisconnectedGraph("closeness undefined: node " + std::to_string(i) +
                                        " unreachable from " + std::to_string(v));
            sum += dist[static_cast<std::size_t>(i)];
        }
        s.values[static_cast<std::size_t>(v)] = 1.0 / sum;
    }
    return s;
}

/// Betweenness (Brandes): values[v] = sum over unordered pairs {s,t},
/// s != v != t, of the fraction of shortest 1/w-length paths from s to t
/// passing through v. Disconnected pairs contribute nothing.
inline CentralityScores betweenness_scores(const Graph& g) {
    const int n = g.node_count();
    CentralityScores out{Measure::betweenness, std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    constexpr double inf = std::numeric_limits<double>::infinity();

    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<bool> settled(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<int> settle_order;
    settle_order.reserve(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(settled.begin(), settled.end(), false);
        for (auto& p : preds) p.clear();
        settle_order.clear();

        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        dist[static_cast<std::size_t>(s)] = 0.0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        queue.push({0.0, s});
        while (!queue.empty()) {
            const auto [d, v] = queue.top();
            queue.pop();
            if (settled[static_cast<std::size_t>(v)]) continue;
            settled[static_cast<std::size_t>(v)] = true;
            settle_order.push_back(v);
            for (const Neighbor& nb : g.neighbors(v)) {
                if (nb.id == v) continue;
                const std::size_t u = static_cast<std::size_t>(nb.id);
                const double nd = d + 1.0 / nb.weight;
                if (nd < dist[u]) {
                    dist[u] = nd;
                    sigma[u] = sigma[static_cast<std::size_t>(v)];
                    preds[u].assign(1, v);
                    queue.push({nd, nb.id});
                } else if (nd == dist[u]) {
                    sigma[u] += sigma[static_cast<std::size_t>(v)];
                    preds[u].push_back(v);
                }
            }
        }

        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = settle_order.rbegin(); it != settle_order.rend(); ++it) {
            const int w = *it;
            for (int p : preds[static_cast<std::size_t>(w)])
                delta[static_cast<std::size_t>(p)] +=
                    sigma[static_cast<std::size_t>(p)] / sigma[static_cast<std::size_t>(w)] *
                    (1.0 + delta[static_cast<std::size_t>(w)]);
            if (w != s)
                out.values[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    // each unordered pair was accumulated from both endpoints
    for (double& v : out.values) v /= 2.0;
    return out;
}

/// Relative closeness: C(i) = clo(i) / (2 * max closeness + 1), always in
/// the open interval (0, 1/2). Small enough to never reorder nodes whose
/// betweenness differs by a whole unit, which is what makes it a usable
/// tie-breaker on top of betweenness.
inline std::vector<double> relative_closeness(const CentralityScores& clo) {
    if (clo.measure != Measure::closeness)
        throw InvalidInput("relative_closeness expects closeness scores");
    double max_c = 0.0;
    for (double c : clo.values) {
        if (!(c > 0.0)) throw InvalidInput("closeness values must be positive");
        max_c = std::max(max_c, c);
    }
    std::vector<double> out;
    out.reserve(clo.values.size());
    for (double c : clo.values) out.push_back(c / (2.0 * max_c + 1.0));
    return out;
}

/// Combined measure: betweenness plus relative closeness.
inline CentralityScores combined_scores(const Graph& g) {
    const CentralityScores bet = betweenness_scores(g);
    const std::vector<double> rel = relative_closeness(closeness_scores(g));
    CentralityScores s{Measure::combined, std::vector<double>(bet.values.size())};
    for (std::size_t i = 0; i < bet.values.size(); ++i) s.values[i] = bet.values[i] + rel[i];
    return s;
}

}  // namespace commrank
