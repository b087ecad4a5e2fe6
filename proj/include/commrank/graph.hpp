#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "commrank/errors.hpp"

namespace commrank {

struct Edge {
    int u;
    int v;
    double weight;
};

struct Neighbor {
    int id;
    double weight;
};

/// Parameters of the 1-dimensional ring lattice used by the benchmarks.
/// The rewiring probability and lattice dimension are fixed constants of
/// this artifact, not knobs: p = 0 (the generator is deterministic) and
/// dim = 1.
struct LatticeParams {
    int n;    ///< node count, >= 3
    int nei;  ///< neighborhood radius, 1 <= nei < n/2

    static constexpr double rewiring_probability = 0.0;
    static constexpr int dimension = 1;
};

/// Undirected weighted graph with dense node ids 0..n-1.
///
/// Immutable after construction; all invariants (index ranges, positive
/// weights, no duplicate undirected edges, at most one self-loop per node)
/// are enforced by build_graph. Adjacency is CSR-packed and symmetric; a
/// self-loop appears once in its node's neighbor list but contributes twice
/// to strength (the convention that keeps modularity invariant under
/// community aggregation).
class Graph {
public:
    Graph() = default;

    int node_count() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Neighbor> neighbors(int v) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
                adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
    }

    /// Sum of incident edge weights; a self-loop of weight w contributes 2w.
    double strength(int v) const {
        check_node(v);
        return strength_[static_cast<std::size_t>(v)];
    }

    /// Weight of v's self-loop, or 0 if it has none.
    double loop_weight(int v) const {
        check_node(v);
        return loop_[static_cast<std::size_t>(v)];
    }

    /// Total edge weight, self-loops counted once.
    double total_weight() const { return total_weight_; }

    std::size_t edge_count() const { return edges_.size(); }

    void check_node(int v) const {
        if (v < 0 || v >= n_)
            throw IndexOutOfRange("node " + std::to_string(v) + " not in [0, " +
                                  std::to_string(n_) + ")");
    }

private:
    friend Graph build_graph(int node_count, std::span<const Edge> edge_list);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adj_;
    std::vector<double> strength_;
    std::vector<double> loop_;
    double total_weight_ = 0.0;
};

/// Builds a graph from an edge list, validating every invariant.
inline Graph build_graph(int node_count, std::span<const Edge> edge_list) {
    if (node_count < 0) throw InvalidInput("negative node count");
    Graph g;
    g.n_ = node_count;
    g.edges_.assign(edge_list.begin(), edge_list.end());

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.edges_.size());
    std::vector<std::size_t> degree(static_cast<std::size_t>(node_count), 0);
    for (const Edge& e : g.edges_) {
        g.check_node(e.u);
        g.check_node(e.v);
        if (!(e.weight > 0.0))
            throw NonPositiveWeight("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") has weight " + std::to_string(e.weight));
        const auto a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        const auto b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        if (!seen.insert((a << 32) | b).second)
            throw DuplicateEdge("duplicate undirected edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "}");
        degree[static_cast<std::size_t>(e.u)]++;
        if (e.u != e.v) degree[static_cast<std::size_t>(e.v)]++;
    }

    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (int v = 0; v < node_count; ++v)
        g.offsets_[static_cast<std::size_t>(v) + 1] =
            g.offsets_[static_cast<std::size_t>(v)] + degree[static_cast<std::size_t>(v)];
    g.adj_.resize(g.offsets_.back());

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    g.strength_.assign(static_cast<std::size_t>(node_count), 0.0);
    g.loop_.assign(static_cast<std::size_t>(node_count), 0.0);
    for (const Edge& e : g.edges_) {
        g.total_weight_ += e.weight;
        if (e.u == e.v) {
            g.adj_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.weight};
            g.strength_[static_cast<std::size_t>(e.u)] += 2.0 * e.weight;
            g.loop_[static_cast<std::size_t>(e.u)] += e.weight;
        } else {
            g.adj_[cursor[static_cast<std::size_t>(e.u)]++] = {e.v, e.weight};
            g.adj_[cursor[static_cast<std::size_t>(e.v)]++] = {e.u, e.weight};
            g.strength_[static_cast<std::size_t>(e.u)] += e.weight;
            g.strength_[static_cast<std::size_t>(e.v)] += e.weight;
        }
    }
    return g;
}

/// Parses the on-disk edge-list format: one "u v w" edge per line (w
/// optional, default 1.0), a bare "u" line declares an isolated node, '#'
/// starts a comment. Node count is 1 + the largest id mentioned; ids are
/// not remapped, so gaps become isolated nodes.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u = 0, v = 0;
        double w = 1.0;
        if (!(ls >> u)) {
            ls.clear();
            std::string leftover;
            if (ls >> leftover)
                throw ParseError(line_no, "expected node id, got '" + leftover + "'");
            continue;  // blank or comment-only line
        }
        if (u < 0) throw ParseError(line_no, "negative node id");
        if (ls >> v) {
            if (v < 0) throw ParseError(line_no, "negative node id");
            if (!(ls >> w)) {
                if (!ls.eof()) throw ParseError(line_no, "malformed weight");
                w = 1.0;
                ls.clear();
            }
            std::string trailing;
            if (ls >> trailing) throw ParseError(line_no, "trailing token '" + trailing + "'");
            edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
            max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
        } else if (ls.eof()) {
            max_id = std::max(max_id, static_cast<int>(u));  // isolated node
        } else {
            throw ParseError(line_no, "malformed node id");
        }
    }
    return build_graph(max_id + 1, edges);  // propagates graph invariant errors
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/// Inverse of parse_edge_list: emits every edge as "u v w" and every
/// isolated node as a bare id line, so parsing the output reproduces the
/// graph exactly (up to edge order).
inline void serialize_edge_list(const Graph& g, std::ostream& out) {
    std::vector<bool> touched(static_cast<std::size_t>(g.node_count()), false);
    for (const Edge& e : g.edges()) {
        touched[static_cast<std::size_t>(e.u)] = true;
        touched[static_cast<std::size_t>(e.v)] = true;
        out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    }
    for (int v = 0; v < g.node_count(); ++v)
        if (!touched[static_cast<std::size_t>(v)]) out << v << '\n';
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out.precision(17);
    serialize_edge_list(g, out);
    return out.str();
}

/// Throws InvalidParams unless n >= 3 and 1 <= nei < n/2 (the bound that
/// keeps the circulant construction free of duplicate edges).
inline void check_lattice_params(const LatticeParams& params) {
    if (params.n < 3)
        throw InvalidParams("lattice needs n >= 3, got n = " + std::to_string(params.n));
    if (params.nei < 1 || 2 * params.nei >= params.n)
        throw InvalidParams("lattice needs 1 <= nei < n/2, got n = " + std::to_string(params.n) +
                            ", nei = " + std::to_string(params.nei));
}

/// Deterministic Watts-Strogatz ring lattice at p = 0, dim = 1: node i is
/// adjacent to (i + j) mod n for j = 1..nei, all weights 1. Every node has
/// degree 2*nei and the graph is vertex-transitive.
inline Graph ring_lattice(const LatticeParams& params) {
    check_lattice_params(params);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.n) * static_cast<std::size_t>(params.nei));
    for (int i = 0; i < params.n; ++i)
        for (int j = 1; j <= params.nei; ++j) edges.push_back({i, (i + j) % params.n, 1.0});
    return build_graph(params.n, edges);
}

}  // namespace commrank
