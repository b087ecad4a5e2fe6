#pragma once

#include <vector>

#include "commrank/errors.hpp"
#include "commrank/graph.hpp"
#include "commrank/partition.hpp"

namespace commrank {

/// Weighted Newman-Girvan modularity:
///
///   Q = sum_c [ W_in(c)/m - (S(c)/(2m))^2 ]
///
/// where W_in(c) is c's internal edge weight (non-loop internal edges once,
/// self-loops once), S(c) the total strength of its members (loops twice),
/// and m the total edge weight (loops once). Always in [-1/2, 1].
inline double modularity(const Graph& g, const Partition& partition) {
    if (partition.node_count() != g.node_count())
        throw InvalidPartition("partition size " + std::to_string(partition.node_count()) +
                               " does not match node count " + std::to_string(g.node_count()));
    const double m = g.total_weight();
    if (m <= 0.0) throw EmptyGraph("modularity undefined without edges");

    const Partition canon = partition.canonical();
    const int k = canon.community_count();
    std::vector<double> internal(static_cast<std::size_t>(k), 0.0);
    std::vector<double> strength_sum(static_cast<std::size_t>(k), 0.0);
    for (const Edge& e : g.edges())
        if (canon[e.u] == canon[e.v]) internal[static_cast<std::size_t>(canon[e.u])] += e.weight;
    for (int v = 0; v < g.node_count(); ++v)
        strength_sum[static_cast<std::size_t>(canon[v])] += g.strength(v);

    double q = 0.0;
    for (int c = 0; c < k; ++c) {
        const double s = strength_sum[static_cast<std::size_t>(c)] / (2.0 * m);
        q += internal[static_cast<std::size_t>(c)] / m - s * s;
    }
    return q;
}

}  // namespace commrank
