#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commrank/errors.hpp"
#include "commrank/graph.hpp"
#include "commrank/ordering.hpp"
#include "commrank/partition.hpp"
#include "commrank/rng.hpp"

namespace commrank {

/// Raised when label propagation fails to stabilize; carries the partition
/// from the last completed sweep.
struct LpNoConvergence : NoConvergence {
    LpNoConvergence(int sweeps, Partition last)
        : NoConvergence("label propagation not stable after " + std::to_string(sweeps) +
                        " sweeps"),
          last_partition(std::move(last)) {}
    Partition last_partition;
};

namespace detail {

/// Accumulates (label, weight) pairs over v's neighborhood into `out`,
/// in first-appearance order. `slot` is an n-sized scratch map, -1-filled;
/// it is restored before returning. A self-loop counts its weight toward
/// v's own label.
inline void gather_neighbor_labels(const Graph& g, int v, const std::vector<int>& labels,
                                   std::vector<int>& slot,
                                   std::vector<std::pair<int, double>>& out) {
    out.clear();
    for (const Neighbor& nb : g.neighbors(v)) {
        const int label = labels[static_cast<std::size_t>(nb.id)];
        int& s = slot[static_cast<std::size_t>(label)];
        if (s < 0) {
            s = static_cast<int>(out.size());
            out.emplace_back(label, 0.0);
        }
        out[static_cast<std::size_t>(s)].second += nb.weight;
    }
    for (const auto& [label, weight] : out) slot[static_cast<std::size_t>(label)] = -1;
}

}  // namespace detail

/// Total neighbor weight per label around v. The node's own label gets no
/// vote unless v carries a self-loop.
inline std::unordered_map<int, double> neighbor_label_weights(const Graph& g, int v,
                                                              const Partition& labels) {
    g.check_node(v);
    if (labels.node_count() != g.node_count())
        throw InvalidPartition("partition size does not match node count");
    std::unordered_map<int, double> out;
    for (const Neighbor& nb : g.neighbors(v)) out[labels[nb.id]] += nb.weight;
    return out;
}

/// Ordered asynchronous label propagation.
///
/// Starts from singleton labels and sweeps the nodes in the given order;
/// each node adopts a uniformly random label among those with maximal total
/// neighbor weight, except that it keeps its current label whenever that one
/// is already maximal. Stops at the first sweep that changes nothing.
inline Partition label_propagation(const Graph& g, const NodeOrder& order, Rng& rng,
                                   int max_sweeps = 1000) {
    const int n = g.node_count();
    if (static_cast<int>(order.sequence.size()) != n)
        throw InvalidInput("order length does not match node count");

    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v;

    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, double>> acc;
    std::vector<int> best;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (int v : order.sequence) {
            detail::gather_neighbor_labels(g, v, labels, slot, acc);
            if (acc.empty()) continue;  // isolated nodes keep their own label
            double max_w = acc.front().second;
            for (const auto& [label, weight] : acc) max_w = std::max(max_w, weight);
            best.clear();
            bool current_is_max = false;
            const int current = labels[static_cast<std::size_t>(v)];
            for (const auto& [label, weight] : acc) {
                if (weight == max_w) {
                    if (label == current) current_is_max = true;
                    best.push_back(label);
                }
            }
            if (current_is_max) continue;
            labels[static_cast<std::size_t>(v)] =
                best.size() == 1 ? best.front()
                                 : best[static_cast<std::size_t>(rng.below(best.size()))];
            changed = true;
        }
        if (!changed) return Partition(std::move(labels));
    }
    throw LpNoConvergence(max_sweeps, Partition(std::move(labels)));
}

}  // namespace commrank
