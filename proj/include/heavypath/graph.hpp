// Weighted undirected graph model and the weight-sorted edge list used for
// sorted access by the top-k solvers.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace heavypath {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint32_t;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    NodeId u = 0;  // always u < v
    NodeId v = 0;
    double weight = 0.0;

    NodeId other(NodeId x) const { return x == u ? v : u; }
    bool touches(NodeId x) const { return x == u || x == v; }
};

struct Neighbor {
    NodeId node;
    double weight;
    EdgeIndex edge;
};

inline std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Immutable after construction; safe to share between concurrent solver runs.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates and normalizes the edge list. Throws GraphError on self-loops,
    // duplicate edges, negative or non-finite weights, or out-of-range ids.
    // `labels` may be empty (ids print as numbers) or hold one label per node.
    WeightedGraph(std::size_t node_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_[i]; }

    // Neighbors sorted by (weight desc, node asc).
    std::span<const Neighbor> neighbors(NodeId x) const { return adjacency_[x]; }
    std::size_t degree(NodeId x) const { return adjacency_[x].size(); }

    std::optional<EdgeIndex> find_edge(NodeId a, NodeId b) const;
    // Throws GraphError when (a,b) is not an edge.
    double weight(NodeId a, NodeId b) const;

    double max_weight() const { return w_max_; }
    double min_weight() const { return w_min_; }
    std::size_t max_degree() const { return d_max_; }

    std::string label(NodeId x) const;
    std::span<const std::string> labels() const { return labels_; }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::unordered_map<std::uint64_t, EdgeIndex> index_;
    std::vector<std::string> labels_;
    double w_max_ = 0.0;
    double w_min_ = 0.0;
    std::size_t d_max_ = 0;
};

// Edges in non-increasing weight order, ties by normalized key (u, v)
// ascending. Immutable; per-run cursors live in EdgeCursor.
class SortedEdgeList {
public:
    SortedEdgeList() = default;
    // The list keeps a pointer to g, which must outlive it.
    explicit SortedEdgeList(const WeightedGraph& g);
    explicit SortedEdgeList(WeightedGraph&&) = delete;

    const WeightedGraph& graph() const { return *graph_; }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    // Edge at 1-based depth d.
    const Edge& at_depth(std::size_t d) const { return graph_->edge(order_.at(d - 1)); }
    EdgeIndex index_at_depth(std::size_t d) const { return order_.at(d - 1); }
    // 1-based depth at which edge i appears in sorted order.
    std::size_t depth_of(EdgeIndex i) const { return depth_of_.at(i); }

private:
    const WeightedGraph* graph_ = nullptr;
    std::vector<EdgeIndex> order_;
    std::vector<std::size_t> depth_of_;
};

// Sorted-access cursor: d is the depth of the last edge returned (0 before
// the first read), w_d its weight.
class EdgeCursor {
public:
    explicit EdgeCursor(const SortedEdgeList& list) : list_(&list) {}

    std::optional<EdgeIndex> next();
    bool exhausted() const { return depth_ >= list_->size(); }
    std::size_t depth() const { return depth_; }
    double weight_at_depth() const;

private:
    const SortedEdgeList* list_;
    std::size_t depth_ = 0;
};

SortedEdgeList sorted_edges(const WeightedGraph& g);
SortedEdgeList sorted_edges(WeightedGraph&&) = delete;

}  // namespace heavypath
