#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "commrank/errors.hpp"

namespace commrank {

/// Crisp clustering: one community label per node. Labels are arbitrary
/// ints; canonical() relabels to 0..k-1 by first appearance, which is the
/// stable normal form used for comparisons and aggregation.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> labels) : labels_(std::move(labels)) {}

    static Partition singletons(int n) {
        std::vector<int> l(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) l[static_cast<std::size_t>(v)] = v;
        return Partition(std::move(l));
    }

    int node_count() const { return static_cast<int>(labels_.size()); }
    int operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const int> labels() const { return labels_; }
    std::vector<int>& mutable_labels() { return labels_; }

    Partition canonical() const {
        std::unordered_map<int, int> remap;
        remap.reserve(labels_.size());
        std::vector<int> out(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto [it, inserted] = remap.try_emplace(labels_[i], static_cast<int>(remap.size()));
            out[i] = it->second;
        }
        return Partition(std::move(out));
    }

    int community_count() const {
        std::unordered_map<int, int> seen;
        for (int l : labels_) seen.try_emplace(l, 0);
        return static_cast<int>(seen.size());
    }

    /// Exact label equality (use equivalent() for clustering equality).
    bool operator==(const Partition&) const = default;

    /// True if both partitions induce the same equivalence classes.
    bool equivalent(const Partition& other) const {
        if (labels_.size() != other.labels_.size()) return false;
        return canonical().labels_ == other.canonical().labels_;
    }

private:
    std::vector<int> labels_;
};

}  // namespace commrank
