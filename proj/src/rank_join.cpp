#include "heavypath/rank_join.hpp"

#include <chrono>
#include <deque>

namespace heavypath {
namespace {

class SelfJoin {
public:
    SelfJoin(const WeightedGraph& g, std::size_t length, std::size_t k,
             const RankJoinOptions& options, RankJoinResult& result)
        : g_(g),
          length_(length),
          k_(k),
          options_(options),
          m_(result.metrics),
          seen_(g.node_count()),
          on_path_(g.node_count(), 0),
          top_(length) {}

    void add_edge(const Edge& e) {
        seen_[e.u].push_back({e.v, e.weight, 0});
        seen_[e.v].push_back({e.u, e.weight, 0});
        segment_.assign({e.u, e.v});
        on_path_[e.u] = on_path_[e.v] = 1;
        grow(true);
        on_path_[e.u] = on_path_[e.v] = 0;
    }

    const PathBuffer& top() const { return top_; }

private:
    // Enumerates every simple path of the target length through the seed edge
    // exactly once: the right part is fixed first, then only the left end
    // grows.
    void grow(bool right_phase) {
        if (segment_.size() == length_ + 1) {
            emit();
            return;
        }
        if (right_phase) {
            grow(false);
            try_extend(End::right, true);
        } else {
            try_extend(End::left, false);
        }
    }

    void try_extend(End end, bool right_phase) {
        const NodeId at = end == End::right ? segment_.back() : segment_.front();
        for (const Neighbor& nb : seen_[at]) {
            ++m_.edge_reads;
            if (on_path_[nb.node]) continue;
            push(end, nb.node);
            if (segment_.size() < length_ + 1 && is_dead_end()) {
                pop(end);
                continue;
            }
            ++m_.joins;
            grow(right_phase);
            pop(end);
        }
    }

    // A partial segment neither of whose ends has any graph neighbor off the
    // segment can never reach the target length; it is not composed.
    bool is_dead_end() {
        for (NodeId end : {segment_.front(), segment_.back()}) {
            for (const Neighbor& nb : g_.neighbors(end)) {
                ++m_.edge_reads;
                if (!on_path_[nb.node]) return false;
            }
        }
        return true;
    }

    void push(End end, NodeId x) {
        if (end == End::right) {
            segment_.push_back(x);
        } else {
            segment_.push_front(x);
        }
        on_path_[x] = 1;
    }

    void pop(End end) {
        NodeId x;
        if (end == End::right) {
            x = segment_.back();
            segment_.pop_back();
        } else {
            x = segment_.front();
            segment_.pop_front();
        }
        on_path_[x] = 0;
    }

    void emit() {
        m_.count_path(length_);
        if (options_.path_cap && m_.paths_constructed > *options_.path_cap) {
            throw ResourceError("rank join exceeded the cap of " +
                                std::to_string(*options_.path_cap) + " constructed paths");
        }
        Path p = Path::from_nodes(g_, {segment_.begin(), segment_.end()});
        if (top_.insert(p) == InsertOutcome::duplicate) {
            ++m_.duplicates_discarded;
            return;
        }
        if (top_.size() > k_) top_.pop_bottom();
        m_.observe_stored(top_.size());
    }

    const WeightedGraph& g_;
    std::size_t length_;
    std::size_t k_;
    const RankJoinOptions& options_;
    RunMetrics& m_;
    std::vector<std::vector<Neighbor>> seen_;  // endpoint index of read edges
    std::vector<char> on_path_;
    std::deque<NodeId> segment_;
    PathBuffer top_;
};

}  // namespace

RankJoinResult rank_join_topk(const SortedEdgeList& edges, std::size_t length, std::size_t k,
                              const RankJoinOptions& options) {
    require_query(length, k);
    const auto start = std::chrono::steady_clock::now();
    const WeightedGraph& g = edges.graph();
    const double w_max = g.max_weight();
    RankJoinResult result;
    SelfJoin join(g, length, k, options, result);
    EdgeCursor cursor(edges);

    while (auto idx = cursor.next()) {
        ++result.metrics.edge_reads;
        const Edge& e = g.edge(*idx);
        join.add_edge(e);
        result.theta = e.weight + static_cast<double>(length - 1) * w_max;
        if (options.trace) options.trace->record(length, result.theta, TraceTrigger::sorted_access);
        const PathBuffer& top = join.top();
        if (top.size() == k && top.bottom().weight() >= result.theta) {
            result.stopped_by_threshold = true;
            break;
        }
    }
    result.metrics.depth = cursor.depth();
    result.paths.assign(join.top().begin(), join.top().end());
    result.status = result.paths.size() < k ? RunStatus::exhausted : RunStatus::complete;
    result.metrics.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

std::size_t rank_join_depth_probe(const SortedEdgeList& edges, std::size_t length) {
    return rank_join_topk(edges, length, 1).metrics.depth;
}

}  // namespace heavypath
