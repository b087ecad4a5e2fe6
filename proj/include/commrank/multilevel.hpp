#pragma once

#include <cmath>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commrank/errors.hpp"
#include "commrank/graph.hpp"
#include "commrank/ordering.hpp"
#include "commrank/partition.hpp"
#include "commrank/quality.hpp"
#include "commrank/rng.hpp"

namespace commrank {

/// Book-keeping for local moving: per-community internal weight and total
/// strength, kept consistent under detach/attach so that the modularity
/// gain of a candidate move is O(deg) to evaluate.
class CommunityState {
public:
    CommunityState(const Graph& g, const Partition& partition)
        : graph_(&g), total_weight_(g.total_weight()) {
        if (partition.node_count() != g.node_count())
            throw InvalidPartition("partition size does not match node count");
        const Partition canon = partition.canonical();
        community_.assign(canon.labels().begin(), canon.labels().end());
        const int k = canon.community_count();
        internal_.assign(static_cast<std::size_t>(k), 0.0);
        strength_sum_.assign(static_cast<std::size_t>(k), 0.0);
        for (const Edge& e : g.edges())
            if (community_of(e.u) == community_of(e.v))
                internal_[static_cast<std::size_t>(community_of(e.u))] += e.weight;
        for (int v = 0; v < g.node_count(); ++v)
            strength_sum_[static_cast<std::size_t>(community_of(v))] += g.strength(v);
    }

    static CommunityState singletons(const Graph& g) {
        return CommunityState(g, Partition::singletons(g.node_count()));
    }

    const Graph& graph() const { return *graph_; }
    int community_count() const { return static_cast<int>(internal_.size()); }
    double total_weight() const { return total_weight_; }

    /// Community of v, or -1 while v is detached.
    int community_of(int v) const { return community_[static_cast<std::size_t>(v)]; }

    double community_internal_weight(int c) const {
        check_community(c);
        return internal_[static_cast<std::size_t>(c)];
    }

    double community_total_strength(int c) const {
        check_community(c);
        return strength_sum_[static_cast<std::size_t>(c)];
    }

    /// Total edge weight between v and the current members of c (self-loops
    /// excluded; a detached v is a member of nothing).
    double weight_to_community(int v, int c) const {
        graph_->check_node(v);
        check_community(c);
        double w = 0.0;
        for (const Neighbor& nb : graph_->neighbors(v))
            if (nb.id != v && community_of(nb.id) == c) w += nb.weight;
        return w;
    }

    /// Modularity change from inserting the detached node v into community
    /// c, relative to leaving v in a community of its own:
    ///
    ///   dQ = k_{v,in}/m - S_tot(c) * k_v / (2 m^2)
    double modularity_gain(int v, int c) const {
        if (community_of(v) != -1) throw InvalidInput("node must be detached to evaluate a gain");
        const double k_in = weight_to_community(v, c);
        const double k_v = graph_->strength(v);
        return k_in / total_weight_ -
               strength_sum_[static_cast<std::size_t>(c)] * k_v /
                   (2.0 * total_weight_ * total_weight_);
    }

    void detach(int v) {
        const int c = community_of(v);
        if (c == -1) throw InvalidInput("node already detached");
        internal_[static_cast<std::size_t>(c)] -=
            weight_to_community(v, c) + graph_->loop_weight(v);
        strength_sum_[static_cast<std::size_t>(c)] -= graph_->strength(v);
        community_[static_cast<std::size_t>(v)] = -1;
    }

    void attach(int v, int c) {
        if (community_of(v) != -1) throw InvalidInput("node must be detached before attach");
        check_community(c);
        internal_[static_cast<std::size_t>(c)] +=
            weight_to_community(v, c) + graph_->loop_weight(v);
        strength_sum_[static_cast<std::size_t>(c)] += graph_->strength(v);
        community_[static_cast<std::size_t>(v)] = c;
    }

    Partition partition() const { return Partition(community_); }

private:
    void check_community(int c) const {
        if (c < 0 || c >= community_count())
            throw UnknownCommunity("community " + std::to_string(c) + " not in [0, " +
                                   std::to_string(community_count()) + ")");
    }

    const Graph* graph_;
    double total_weight_;
    std::vector<int> community_;
    std::vector<double> internal_;
    std::vector<double> strength_sum_;
};

/// Free-function form of the gain evaluation (v must be detached).
inline double modularity_gain(const CommunityState& state, int v, int community) {
    return state.modularity_gain(v, community);
}

/// One level of greedy modularity optimization. Starting from singleton
/// communities, sweeps the nodes in the given order, moving each node to
/// the adjacent community of maximal gain; it stays put unless a move
/// strictly improves on re-inserting into its former community (equal-gain
/// candidates other than the former community are drawn uniformly).
/// Sweeps repeat until one passes without a single move.
///
/// Returns the partition (canonical labels) and whether any move happened.
inline std::pair<Partition, bool> local_moving(const Graph& g, const NodeOrder& order, Rng& rng) {
    const int n = g.node_count();
    if (static_cast<int>(order.sequence.size()) != n)
        throw InvalidInput("order length does not match node count");
    CommunityState state = CommunityState::singletons(g);
    if (g.total_weight() <= 0.0) return {state.partition(), false};

    const double m = g.total_weight();
    std::vector<int> slot(static_cast<std::size_t>(n), -1);       // community -> index into acc
    std::vector<std::pair<int, double>> acc;                      // (community, weight to it)
    std::vector<int> tied;
    bool improved = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : order.sequence) {
            const int former = state.community_of(v);
            // weights from v to each adjacent community, one adjacency pass
            acc.clear();
            for (const Neighbor& nb : g.neighbors(v)) {
                if (nb.id == v) continue;
                const int c = state.community_of(nb.id);
                int& s = slot[static_cast<std::size_t>(c)];
                if (s < 0) {
                    s = static_cast<int>(acc.size());
                    acc.emplace_back(c, 0.0);
                }
                acc[static_cast<std::size_t>(s)].second += nb.weight;
            }
            for (const auto& [c, w] : acc) slot[static_cast<std::size_t>(c)] = -1;

            state.detach(v);
            const double k_v = g.strength(v);
            double w_former = 0.0;
            for (const auto& [c, w] : acc)
                if (c == former) w_former = w;
            const double gain_stay =
                w_former / m -
                state.community_total_strength(former) * k_v / (2.0 * m * m);

            double best_gain = gain_stay;
            tied.clear();
            for (const auto& [c, w] : acc) {
                if (c == former) continue;
                const double gain =
                    w / m - state.community_total_strength(c) * k_v / (2.0 * m * m);
                if (gain > best_gain) {
                    best_gain = gain;
                    tied.clear();
                    tied.push_back(c);
                } else if (gain == best_gain && !tied.empty()) {
                    tied.push_back(c);
                }
            }
            // ties at the top prefer the former community (tied stays empty
            // when nothing beat gain_stay)
            int target = former;
            if (!tied.empty())
                target = tied.size() == 1
                             ? tied.front()
                             : tied[static_cast<std::size_t>(rng.below(tied.size()))];
            state.attach(v, target);
            if (target != former) {
                moved = true;
                improved = true;
            }
        }
    }
    return {state.partition().canonical(), improved};
}

/// Collapses each community to one node. Weight between two super-nodes is
/// the total weight of edges crossing the two communities; each community's
/// internal weight (every internal edge once, existing loops once) becomes a
/// self-loop. With the loops-count-twice strength convention this keeps
/// strengths, total weight and modularity invariant.
///
/// Returns the aggregated graph and the map node -> super-node.
inline std::pair<Graph, std::vector<int>> aggregate(const Graph& g, const Partition& partition) {
    if (partition.node_count() != g.node_count())
        throw InvalidPartition("partition size does not match node count");
    const Partition canon = partition.canonical();
    const int k = canon.community_count();

    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(g.edge_count());
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = std::min(canon[e.u], canon[e.v]);
        const int b = std::max(canon[e.u], canon[e.v]);
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
        auto [it, inserted] = index.try_emplace(key, edges.size());
        if (inserted)
            edges.push_back({a, b, e.weight});
        else
            edges[it->second].weight += e.weight;
    }
    std::vector<int> node_map(canon.labels().begin(), canon.labels().end());
    return {build_graph(k, edges), std::move(node_map)};
}

/// Optional per-level diagnostics filled by multilevel().
struct MultilevelTrace {
    /// Modularity of the induced partition on the original graph after each
    /// level's local moving (non-decreasing by construction).
    std::vector<double> level_modularity;
    /// Per level: |Q(level graph, level partition) - Q(aggregated graph,
    /// singletons)|, which tests that aggregation preserves modularity.
    std::vector<double> aggregation_drift;
};

/// Multilevel (Louvain-style) modularity optimization. The supplied order
/// drives the first (finest) level only; coarser levels visit super-nodes
/// in natural order. Stops when a level's local moving makes no move, and
/// returns the induced partition on the original nodes.
inline Partition multilevel(const Graph& g, const NodeOrder& order, Rng& rng,
                            MultilevelTrace* trace = nullptr) {
    const int n = g.node_count();
    std::vector<int> assign(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) assign[static_cast<std::size_t>(v)] = v;

    Graph level_graph;
    const Graph* current = &g;
    NodeOrder level_order = order;
    for (;;) {
        auto [part, improved] = local_moving(*current, level_order, rng);
        if (!improved) break;
        auto [coarser, node_map] = aggregate(*current, part);
        for (int v = 0; v < n; ++v)
            assign[static_cast<std::size_t>(v)] =
                node_map[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])];
        if (trace) {
            trace->level_modularity.push_back(modularity(g, Partition(assign)));
            trace->aggregation_drift.push_back(
                std::abs(modularity(*current, part) -
                         modularity(coarser, Partition::singletons(coarser.node_count()))));
        }
        level_graph = std::move(coarser);
        current = &level_graph;
        level_order = natural_order(level_graph.node_count());
    }
    return Partition(std::move(assign)).canonical();
}

}  // namespace commrank
