#pragma once

#include <random>
#include <vector>

#include "commrank/graph.hpp"
#include "commrank/partition.hpp"

namespace fixtures {

using commrank::Edge;
using commrank::Graph;

/// Unit-weight path 0-1-2.
inline Graph path3() { return commrank::build_graph(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}}); }

/// Star: center 0 with unit-weight leaves 1..3.
inline Graph star3() {
    return commrank::build_graph(4, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
}

/// Unit-weight 5-cycle.
inline Graph c5() {
    return commrank::build_graph(
        5, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
}

/// Triangle with weights 1, 2, 3 on edges (0,1), (0,2), (1,2).
inline Graph triangle123() {
    return commrank::build_graph(3, std::vector<Edge>{{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
}

inline Graph k2(double w = 1.0) { return commrank::build_graph(2, std::vector<Edge>{{0, 1, w}}); }

/// Two disjoint unit triangles: {0,1,2} and {3,4,5}.
inline Graph two_triangles() {
    return commrank::build_graph(6, std::vector<Edge>{{0, 1, 1},
                                                      {1, 2, 1},
                                                      {0, 2, 1},
                                                      {3, 4, 1},
                                                      {4, 5, 1},
                                                      {3, 5, 1}});
}

/// Two unit triangles joined by a single unit bridge 2-3.
inline Graph barbell() {
    return commrank::build_graph(6, std::vector<Edge>{{0, 1, 1},
                                                      {1, 2, 1},
                                                      {0, 2, 1},
                                                      {2, 3, 1},
                                                      {3, 4, 1},
                                                      {4, 5, 1},
                                                      {3, 5, 1}});
}

/// Balanced binary tree on 7 unit-weight nodes (unique shortest paths, so
/// betweenness is integer-valued).
inline Graph binary_tree7() {
    return commrank::build_graph(
        7, std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}, {2, 6, 1}});
}

/// Weights whose reciprocals are dyadic, so path lengths add exactly in
/// floating point and "equal length" is an exact notion shared with the
/// oracles.
inline double dyadic_weight(std::mt19937_64& rng) {
    static const double pool[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    return pool[rng() % 5];
}

/// Connected random graph with 2..max_n nodes: a random attachment tree
/// plus extra random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int max_n = 8) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v,
                         dyadic_weight(rng)});
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool tree_edge = false;
            for (const Edge& e : edges)
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) tree_edge = true;
            if (!tree_edge && rng() % 100 < 25) edges.push_back({u, v, dyadic_weight(rng)});
        }
    return commrank::build_graph(n, edges);
}

/// Random graph that may be disconnected but always has at least one edge.
inline Graph random_graph(std::mt19937_64& rng, int max_n = 8) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 100 < 40) edges.push_back({u, v, dyadic_weight(rng)});
    if (edges.empty()) edges.push_back({0, 1, 1.0});
    return commrank::build_graph(n, edges);
}

inline commrank::Partition random_partition(std::mt19937_64& rng, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        labels[static_cast<std::size_t>(v)] = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return commrank::Partition(std::move(labels));
}

}  // namespace fixtures
