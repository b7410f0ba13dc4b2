#include "heavypath/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heavypath {

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : edges_(std::move(edges)), adjacency_(node_count), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != node_count) {
        throw GraphError("label table size " + std::to_string(labels_.size()) +
                         " does not match node count " + std::to_string(node_count));
    }
    index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u == e.v) {
            throw GraphError("self-loop on node " + std::to_string(e.u));
        }
        if (e.u >= node_count || e.v >= node_count) {
            throw GraphError("edge endpoint out of range");
        }
        if (!std::isfinite(e.weight) || e.weight < 0.0) {
            throw GraphError("edge weight must be finite and non-negative");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        auto [it, inserted] = index_.emplace(edge_key(e.u, e.v), static_cast<EdgeIndex>(i));
        if (!inserted) {
            throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ")");
        }
        adjacency_[e.u].push_back({e.v, e.weight, static_cast<EdgeIndex>(i)});
        adjacency_[e.v].push_back({e.u, e.weight, static_cast<EdgeIndex>(i)});
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end(), [](const Neighbor& a, const Neighbor& b) {
            if (a.weight != b.weight) return a.weight > b.weight;
            return a.node < b.node;
        });
        d_max_ = std::max(d_max_, nbrs.size());
    }
    if (!edges_.empty()) {
        auto [lo, hi] = std::minmax_element(
            edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
        w_min_ = lo->weight;
        w_max_ = hi->weight;
    }
}

std::optional<EdgeIndex> WeightedGraph::find_edge(NodeId a, NodeId b) const {
    auto it = index_.find(edge_key(a, b));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

double WeightedGraph::weight(NodeId a, NodeId b) const {
    auto i = find_edge(a, b);
    if (!i) {
        throw GraphError("no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return edges_[*i].weight;
}

std::string WeightedGraph::label(NodeId x) const {
    if (labels_.empty()) return std::to_string(x);
    return labels_.at(x);
}

SortedEdgeList::SortedEdgeList(const WeightedGraph& g) : graph_(&g) {
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), EdgeIndex{0});
    std::sort(order_.begin(), order_.end(), [&g](EdgeIndex a, EdgeIndex b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        if (ea.weight != eb.weight) return ea.weight > eb.weight;
        return edge_key(ea.u, ea.v) < edge_key(eb.u, eb.v);
    });
    depth_of_.resize(order_.size());
    for (std::size_t d = 0; d < order_.size(); ++d) depth_of_[order_[d]] = d + 1;
}

std::optional<EdgeIndex> EdgeCursor::next() {
    if (exhausted()) return std::nullopt;
    ++depth_;
    return list_->index_at_depth(depth_);
}

double EdgeCursor::weight_at_depth() const {
    if (depth_ == 0) return list_->empty() ? 0.0 : list_->at_depth(1).weight;
    return list_->at_depth(depth_).weight;
}

SortedEdgeList sorted_edges(const WeightedGraph& g) { return SortedEdgeList(g); }

}  // namespace heavypath
