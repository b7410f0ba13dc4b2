#include "heavypath/path.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "heavypath/io.hpp"

namespace heavypath {

Path Path::from_nodes(const WeightedGraph& g, std::vector<NodeId> nodes) {
    if (nodes.size() < 2) throw GraphError("a path needs at least two nodes");
    std::unordered_set<NodeId> seen;
    for (NodeId x : nodes) {
        if (x >= g.node_count()) throw GraphError("node id out of range");
        if (!seen.insert(x).second) throw GraphError("path is not simple");
    }
    double w = canonical_weight(g, nodes);  // also validates adjacency
    return Path(std::move(nodes), w);
}

bool Path::contains(NodeId x) const {
    return std::find(nodes_.begin(), nodes_.end(), x) != nodes_.end();
}

double canonical_weight(const WeightedGraph& g, std::span<const NodeId> nodes) {
    double sum = 0.0;
    const std::size_t n = nodes.size();
    if (n < 2) return sum;
    if (nodes.front() < nodes.back()) {
        for (std::size_t i = 0; i + 1 < n; ++i) sum += g.weight(nodes[i], nodes[i + 1]);
    } else {
        for (std::size_t i = n - 1; i > 0; --i) sum += g.weight(nodes[i], nodes[i - 1]);
    }
    return sum;
}

Path canonical(const Path& p) {
    if (p.is_canonical()) return p;
    std::vector<NodeId> rev(p.nodes_.rbegin(), p.nodes_.rend());
    return Path(std::move(rev), p.weight_);
}

std::optional<Path> extend(const WeightedGraph& g, const Path& p, const Edge& e, End end) {
    const NodeId at = p.end_node(end);
    if (!e.touches(at)) {
        throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not incident to path end " + std::to_string(at));
    }
    return extend(g, p, e.other(at), end, e.weight);
}

std::optional<Path> extend(const WeightedGraph& g, const Path& p, NodeId next, End end,
                           double edge_weight) {
    if (p.contains(next)) return std::nullopt;
    std::vector<NodeId> nodes;
    nodes.reserve(p.nodes_.size() + 1);
    if (end == End::left) nodes.push_back(next);
    nodes.insert(nodes.end(), p.nodes_.begin(), p.nodes_.end());
    if (end == End::right) nodes.push_back(next);

    // The canonical fold order is unchanged when the new edge lands at the
    // tail of the canonical orientation; otherwise recompute from scratch.
    const bool was_canonical = p.is_canonical();
    const bool now_canonical = nodes.front() < nodes.back();
    double w;
    if (was_canonical && now_canonical && end == End::right) {
        w = p.weight_ + edge_weight;
    } else if (!was_canonical && !now_canonical && end == End::left) {
        w = p.weight_ + edge_weight;
    } else {
        w = canonical_weight(g, nodes);
    }
    return Path(std::move(nodes), w);
}

double end_edge_weight(const WeightedGraph& g, const Path& p, End end) {
    auto n = p.nodes();
    if (n.size() < 2) throw GraphError("path has no edges");
    return end == End::left ? g.weight(n[0], n[1]) : g.weight(n[n.size() - 2], n[n.size() - 1]);
}

InsertOutcome PathBuffer::insert(const Path& p) {
    if (p.length() != length_) {
        throw std::invalid_argument("path of length " + std::to_string(p.length()) +
                                    " inserted into buffer of length " + std::to_string(length_));
    }
    auto [it, inserted] = paths_.insert(canonical(p));
    return inserted ? InsertOutcome::inserted : InsertOutcome::duplicate;
}

bool PathBuffer::contains(const Path& p) const { return paths_.count(canonical(p)) != 0; }

Path PathBuffer::remove_top() {
    if (paths_.empty()) throw std::out_of_range("remove_top on an empty buffer");
    auto node = paths_.extract(paths_.begin());
    return std::move(node.value());
}

const Path& PathBuffer::top() const {
    if (paths_.empty()) throw std::out_of_range("top of an empty buffer");
    return *paths_.begin();
}

void PathBuffer::pop_bottom() {
    if (!paths_.empty()) paths_.erase(std::prev(paths_.end()));
}

std::string format_path(const WeightedGraph& g, const Path& p) {
    Path c = canonical(p);
    std::string out = format_weight(c.weight());
    out += '\t';
    bool first = true;
    for (NodeId x : c.nodes()) {
        if (!first) out += ',';
        out += g.label(x);
        first = false;
    }
    return out;
}

}  // namespace heavypath
