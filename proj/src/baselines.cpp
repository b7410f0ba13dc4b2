#include "heavypath/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>
#include <unordered_map>

namespace heavypath {
namespace {

using Clock = std::chrono::steady_clock;

// Depth-limited DFS from every start node. `emit(nodes, weight)` receives each
// simple path exactly once, in canonical orientation, with its weight folded
// left to right along that orientation.
template <class Emit>
void dfs_paths(const WeightedGraph& g, std::size_t length, RunMetrics& m, Emit&& emit) {
    const std::size_t n = g.node_count();
    std::vector<NodeId> stack;
    std::vector<double> sums;
    std::vector<char> on_path(n, 0);
    stack.reserve(length + 1);
    sums.reserve(length + 1);

    auto recurse = [&](auto&& self) -> void {
        if (stack.size() == length + 1) {
            if (stack.front() < stack.back()) emit(std::span<const NodeId>(stack), sums.back());
            return;
        }
        for (const Neighbor& nb : g.neighbors(stack.back())) {
            ++m.edge_reads;
            if (on_path[nb.node]) continue;
            ++m.joins;
            stack.push_back(nb.node);
            sums.push_back(sums.back() + nb.weight);
            on_path[nb.node] = 1;
            self(self);
            on_path[nb.node] = 0;
            sums.pop_back();
            stack.pop_back();
        }
    };
    for (NodeId s = 0; s < n; ++s) {
        stack.assign(1, s);
        sums.assign(1, 0.0);
        on_path[s] = 1;
        recurse(recurse);
        on_path[s] = 0;
    }
}

// (w, nodes) strictly after `bottom` in RankOrder.
bool ranks_after(double w, std::span<const NodeId> nodes, const Path& bottom) {
    if (w != bottom.weight()) return w < bottom.weight();
    return !std::lexicographical_compare(nodes.begin(), nodes.end(), bottom.nodes().begin(),
                                         bottom.nodes().end());
}

}  // namespace

void for_each_simple_path(const WeightedGraph& g, std::size_t length,
                          const std::function<void(const Path&)>& visit) {
    RunMetrics scratch;
    dfs_paths(g, length, scratch, [&](std::span<const NodeId> nodes, double) {
        visit(Path::from_nodes(g, std::vector<NodeId>(nodes.begin(), nodes.end())));
    });
}

std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, std::size_t length) {
    std::vector<Path> out;
    for_each_simple_path(g, length, [&](const Path& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), RankOrder{});
    return out;
}

TopKResult dfs_topk(const WeightedGraph& g, std::size_t length, std::size_t k) {
    require_query(length, k);
    const auto start = Clock::now();
    TopKResult result;
    PathBuffer best(length);
    dfs_paths(g, length, result.metrics, [&](std::span<const NodeId> nodes, double w) {
        result.metrics.count_path(length);
        if (best.size() == k && ranks_after(w, nodes, best.bottom())) return;
        best.insert(Path::from_nodes(g, std::vector<NodeId>(nodes.begin(), nodes.end())));
        if (best.size() > k) best.pop_bottom();
    });
    result.paths.assign(best.begin(), best.end());
    result.status = result.paths.size() < k ? RunStatus::exhausted : RunStatus::complete;
    result.metrics.peak_stored_paths = result.paths.size();
    result.metrics.wall_time = Clock::now() - start;
    return result;
}

// ---------------------------------------------------------------------------
// Dynamic program over S-avoiding paths.
//
// Key (j, l, S): paths of l edges ending at j whose other nodes avoid S
// (S holds j and every node already fixed to the right of j). The MAX of the
// recursion is realized as a lazily extended ranked list per key: candidate r
// is either a bare edge (l == 1) or the sub-key's candidate `sub_rank`
// composed with edge (pred, j).

namespace {

constexpr std::uint32_t kNoState = 0xffffffffu;

struct DpCandidate {
    double weight;
    NodeId pred;
    std::uint32_t sub_state;
    std::uint32_t sub_rank;
};

struct FrontierEntry {
    double weight;
    NodeId pred;
    std::uint32_t sub_state;
    std::uint32_t sub_rank;

    // Max-heap on weight, then lower predecessor first.
    bool operator<(const FrontierEntry& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (pred != o.pred) return pred > o.pred;
        return sub_rank > o.sub_rank;
    }
};

struct DpState {
    NodeId end;
    std::size_t length;
    std::vector<NodeId> avoid;  // sorted
    std::vector<DpCandidate> ranked;
    std::priority_queue<FrontierEntry> frontier;
};

struct KeyHash {
    std::size_t operator()(const std::vector<NodeId>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (NodeId x : key) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

class AvoidanceDp {
public:
    AvoidanceDp(const WeightedGraph& g, const DpOptions& opt, RunMetrics& m)
        : g_(g), opt_(opt), m_(m) {}

    std::uint32_t state(NodeId end, std::size_t length, std::vector<NodeId> avoid) {
        std::vector<NodeId> key;
        key.reserve(avoid.size() + 2);
        key.push_back(end);
        key.push_back(static_cast<NodeId>(length));
        key.insert(key.end(), avoid.begin(), avoid.end());
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (states_.size() >= opt_.max_states) {
            throw ResourceError("dynamic program exceeded " + std::to_string(opt_.max_states) +
                                " memoized states");
        }
        const auto id = static_cast<std::uint32_t>(states_.size());
        index_.emplace(std::move(key), id);
        states_.push_back({end, length, std::move(avoid), {}, {}});
        seed(id);
        return id;
    }

    // Candidate of rank r for a key, materializing lazily.
    const DpCandidate* get(std::uint32_t id, std::size_t r) {
        while (states_[id].ranked.size() <= r) {
            if (states_[id].frontier.empty()) return nullptr;
            FrontierEntry f = states_[id].frontier.top();
            states_[id].frontier.pop();
            states_[id].ranked.push_back({f.weight, f.pred, f.sub_state, f.sub_rank});
            ++stored_;
            m_.observe_stored(stored_);
            if (f.sub_state != kNoState) push_successor(id, f);
        }
        return &states_[id].ranked[r];
    }

    std::vector<NodeId> reconstruct(std::uint32_t id, std::size_t r) const {
        std::vector<NodeId> nodes;
        while (true) {
            const DpState& s = states_[id];
            const DpCandidate& c = s.ranked[r];
            nodes.push_back(s.end);
            if (c.sub_state == kNoState) {
                nodes.push_back(c.pred);
                break;
            }
            id = c.sub_state;
            r = c.sub_rank;
        }
        std::reverse(nodes.begin(), nodes.end());
        return nodes;
    }

private:
    void seed(std::uint32_t id) {
        const NodeId j = states_[id].end;
        const std::size_t l = states_[id].length;
        for (const Neighbor& nb : g_.neighbors(j)) {
            ++m_.edge_reads;
            const auto& avoid = states_[id].avoid;
            if (std::binary_search(avoid.begin(), avoid.end(), nb.node)) continue;
            if (l == 1) {
                states_[id].frontier.push({nb.weight, nb.node, kNoState, 0});
                continue;
            }
            std::vector<NodeId> sub_avoid = avoid;
            sub_avoid.insert(std::upper_bound(sub_avoid.begin(), sub_avoid.end(), nb.node),
                             nb.node);
            const std::uint32_t sub = state(nb.node, l - 1, std::move(sub_avoid));
            if (const DpCandidate* c = get(sub, 0)) {
                ++m_.joins;
                states_[id].frontier.push({c->weight + nb.weight, nb.node, sub, 0});
            }
        }
    }

    void push_successor(std::uint32_t id, const FrontierEntry& f) {
        const DpCandidate* next = get(f.sub_state, f.sub_rank + 1);
        if (!next) return;
        ++m_.joins;
        ++m_.edge_reads;
        const double w = next->weight + g_.weight(f.pred, states_[id].end);
        states_[id].frontier.push({w, f.pred, f.sub_state, f.sub_rank + 1});
    }

    const WeightedGraph& g_;
    const DpOptions& opt_;
    RunMetrics& m_;
    std::deque<DpState> states_;
    std::unordered_map<std::vector<NodeId>, std::uint32_t, KeyHash> index_;
    std::uint64_t stored_ = 0;
};

}  // namespace

TopKResult dp_topk(const WeightedGraph& g, std::size_t length, std::size_t k,
                   const DpOptions& options) {
    require_query(length, k);
    const auto start = Clock::now();
    TopKResult result;
    AvoidanceDp dp(g, options, result.metrics);

    struct Cursor {
        double weight;
        NodeId end;
        std::uint32_t state;
        std::uint32_t rank;
        bool operator<(const Cursor& o) const {
            if (weight != o.weight) return weight < o.weight;
            return end > o.end;
        }
    };
    std::priority_queue<Cursor> heads;
    for (NodeId j = 0; j < g.node_count(); ++j) {
        const std::uint32_t s = dp.state(j, length, {j});
        if (const DpCandidate* c = dp.get(s, 0)) heads.push({c->weight, j, s, 0});
    }

    // Each undirected path surfaces once per endpoint; only the orientation
    // ending at its larger endpoint is canonical, and for that orientation the
    // composed weight equals the canonical fold exactly.
    std::vector<Path> accepted;
    auto kth_weight = [&]() {
        std::nth_element(accepted.begin(), accepted.begin() + static_cast<long>(k - 1),
                         accepted.end(), RankOrder{});
        return accepted[k - 1].weight();
    };
    while (!heads.empty()) {
        if (accepted.size() >= k && heads.top().weight < kth_weight()) break;
        Cursor c = heads.top();
        heads.pop();
        std::vector<NodeId> nodes = dp.reconstruct(c.state, c.rank);
        if (nodes.front() < nodes.back()) {
            result.metrics.count_path(length);
            accepted.push_back(Path::from_nodes(g, std::move(nodes)));
        }
        if (const DpCandidate* n = dp.get(c.state, c.rank + 1)) {
            heads.push({n->weight, c.end, c.state, c.rank + 1});
        }
    }
    std::sort(accepted.begin(), accepted.end(), RankOrder{});
    if (accepted.size() > k) accepted.resize(k);
    result.paths = std::move(accepted);
    result.status = result.paths.size() < k ? RunStatus::exhausted : RunStatus::complete;
    result.metrics.wall_time = Clock::now() - start;
    return result;
}

GreedyResult greedy_path(const WeightedGraph& g, std::size_t length) {
    if (length < 1) throw std::invalid_argument("path length must be >= 1");
    const auto start = Clock::now();
    GreedyResult result;
    RunMetrics& m = result.metrics;
    const SortedEdgeList sorted(g);
    EdgeCursor cursor(sorted);
    std::vector<char> on_path(g.node_count(), 0);

    while (auto seed = cursor.next()) {
        ++m.edge_reads;
        const Edge& e = g.edge(*seed);
        std::deque<NodeId> nodes = {e.u, e.v};
        on_path[e.u] = on_path[e.v] = 1;

        auto best_at = [&](NodeId end) -> const Neighbor* {
            for (const Neighbor& nb : g.neighbors(end)) {
                ++m.edge_reads;
                if (!on_path[nb.node]) return &nb;
            }
            return nullptr;
        };
        while (nodes.size() < length + 1) {
            const Neighbor* right = best_at(nodes.back());
            const Neighbor* left = best_at(nodes.front());
            if (!right && !left) break;
            ++m.joins;
            if (right && (!left || right->weight >= left->weight)) {
                nodes.push_back(right->node);
                on_path[right->node] = 1;
            } else {
                nodes.push_front(left->node);
                on_path[left->node] = 1;
            }
        }
        for (NodeId x : nodes) on_path[x] = 0;
        if (nodes.size() == length + 1) {
            m.depth = cursor.depth();
            result.path = canonical(Path::from_nodes(g, {nodes.begin(), nodes.end()}));
            m.count_path(length);
            break;
        }
        ++m.restarts;
    }
    if (!result.path) m.depth = cursor.depth();
    result.metrics.wall_time = Clock::now() - start;
    return result;
}

}  // namespace heavypath
