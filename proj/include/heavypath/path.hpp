// Simple paths, canonical orientation, and the duplicate-free weight-ordered
// buffer shared by all solvers.
//
// Path weights are always the left-to-right sum of edge weights taken along
// the canonical orientation, so a path reached through different join orders
// carries a bit-identical weight. Only sum aggregation is supported.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "heavypath/graph.hpp"

namespace heavypath {

enum class End { left, right };

class Path {
public:
    Path() = default;

    // Validates adjacency and simplicity; keeps the given orientation.
    static Path from_nodes(const WeightedGraph& g, std::vector<NodeId> nodes);
    static Path from_edge(const Edge& e) { return Path({e.u, e.v}, e.weight); }

    std::span<const NodeId> nodes() const { return nodes_; }
    double weight() const { return weight_; }
    // Number of edges.
    std::size_t length() const { return nodes_.empty() ? 0 : nodes_.size() - 1; }
    NodeId front() const { return nodes_.front(); }
    NodeId back() const { return nodes_.back(); }
    NodeId end_node(End end) const { return end == End::left ? front() : back(); }
    bool contains(NodeId x) const;
    bool is_canonical() const { return nodes_.size() < 2 || nodes_.front() < nodes_.back(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.weight_ == b.weight_ && a.nodes_ == b.nodes_;
    }

private:
    Path(std::vector<NodeId> nodes, double weight) : nodes_(std::move(nodes)), weight_(weight) {}

    friend Path canonical(const Path& p);
    friend std::optional<Path> extend(const WeightedGraph& g, const Path& p, NodeId next, End end,
                                      double edge_weight);

    std::vector<NodeId> nodes_;
    double weight_ = 0.0;
};

// Left-to-right sum over the canonical orientation of `nodes`.
double canonical_weight(const WeightedGraph& g, std::span<const NodeId> nodes);

// p or its reversal, whichever node sequence is lexicographically smaller.
Path canonical(const Path& p);

// Appends edge e at the chosen end of p. Returns nullopt when the new node is
// already on p (cycle rejection). Throws GraphError when e is not incident to
// that end node.
std::optional<Path> extend(const WeightedGraph& g, const Path& p, const Edge& e, End end);
std::optional<Path> extend(const WeightedGraph& g, const Path& p, NodeId next, End end,
                           double edge_weight);

// Weight of the first (left) or last (right) edge of p.
double end_edge_weight(const WeightedGraph& g, const Path& p, End end);

// Total order used for every ranked output: weight descending, then canonical
// node sequence ascending. Both paths must be canonical.
struct RankOrder {
    bool operator()(const Path& a, const Path& b) const {
        if (a.weight() != b.weight()) return a.weight() > b.weight();
        return std::lexicographical_compare(a.nodes().begin(), a.nodes().end(),
                                            b.nodes().begin(), b.nodes().end());
    }
};

enum class InsertOutcome { inserted, duplicate };

// Duplicate-free ordered set of canonical paths of a single length.
class PathBuffer {
public:
    explicit PathBuffer(std::size_t length) : length_(length) {}

    // Stores canonical(p). Throws std::invalid_argument on a length mismatch.
    InsertOutcome insert(const Path& p);
    bool contains(const Path& p) const;

    // Throws std::out_of_range when empty.
    Path remove_top();
    const Path& top() const;

    double top_score() const {
        return paths_.empty() ? -std::numeric_limits<double>::infinity()
                              : paths_.begin()->weight();
    }
    std::size_t size() const { return paths_.size(); }
    bool empty() const { return paths_.empty(); }
    std::size_t length() const { return length_; }

    // Evicts the lightest path; used by bounded top-k result sets.
    void pop_bottom();
    const Path& bottom() const { return *paths_.rbegin(); }

    auto begin() const { return paths_.begin(); }
    auto end() const { return paths_.end(); }

private:
    std::size_t length_;
    std::set<Path, RankOrder> paths_;
};

// `weight<TAB>v0,v1,...` in canonical orientation using node labels.
std::string format_path(const WeightedGraph& g, const Path& p);

}  // namespace heavypath
