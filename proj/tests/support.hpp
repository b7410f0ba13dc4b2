// Test-only helpers: an enumeration oracle written independently of the
// library's DFS, instance fixtures, and HeavyPath observers.

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "heavypath/generators.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/heavy_path.hpp"
#include "heavypath/io.hpp"
#include "heavypath/path.hpp"

namespace testing_support {

using namespace heavypath;

struct OraclePath {
    double weight;
    std::vector<NodeId> nodes;  // front < back

    bool operator<(const OraclePath& o) const {
        if (weight != o.weight) return weight > o.weight;
        return nodes < o.nodes;
    }
    bool operator==(const OraclePath& o) const = default;
};

// Every simple path of `length` edges by brute-force extension of node
// sequences; weights are summed left to right along the front < back order.
inline std::vector<OraclePath> oracle_paths(const WeightedGraph& g, std::size_t length) {
    std::vector<OraclePath> out;
    std::vector<NodeId> seq;
    const auto n = static_cast<NodeId>(g.node_count());
    auto rec = [&](auto&& self) -> void {
        if (seq.size() == length + 1) {
            if (seq.front() < seq.back()) {
                double w = 0.0;
                for (std::size_t i = 0; i + 1 < seq.size(); ++i) w += g.weight(seq[i], seq[i + 1]);
                out.push_back({w, seq});
            }
            return;
        }
        for (NodeId x = 0; x < n; ++x) {
            if (std::find(seq.begin(), seq.end(), x) != seq.end()) continue;
            if (!g.find_edge(seq.back(), x)) continue;
            seq.push_back(x);
            self(self);
            seq.pop_back();
        }
    };
    for (NodeId s = 0; s < n; ++s) {
        seq.assign(1, s);
        rec(rec);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<OraclePath> oracle_topk(const WeightedGraph& g, std::size_t length,
                                           std::size_t k) {
    auto all = oracle_paths(g, length);
    if (all.size() > k) all.resize(k);
    return all;
}

inline std::vector<OraclePath> as_oracle(const std::vector<Path>& paths) {
    std::vector<OraclePath> out;
    for (const Path& p : paths) {
        Path c = canonical(p);
        out.push_back({c.weight(), {c.nodes().begin(), c.nodes().end()}});
    }
    return out;
}

inline WeightedGraph six_node_graph() {
    std::istringstream in(
        "1 2 0.93\n2 3 0.93\n1 3 0.87\n2 4 0.77\n1 6 0.76\n2 5 0.73\n3 4 0.73\n1 4 0.73\n"
        "5 6 0.72\n3 5 0.70\n1 5 0.70\n2 6 0.70\n4 5 0.69\n3 6 0.66\n4 6 0.58\n");
    return load_edge_list(in);
}

inline std::vector<NodeId> ids_of(const WeightedGraph& g, const std::vector<std::string>& labels) {
    std::vector<NodeId> ids;
    for (const std::string& l : labels) {
        for (NodeId x = 0; x < g.node_count(); ++x) {
            if (g.label(x) == l) ids.push_back(x);
        }
    }
    return ids;
}

inline WeightedGraph random_graph(std::uint64_t seed, std::size_t nodes, double p,
                                  bool distinct, double quantum = 0.0) {
    RandomGraphOptions opt;
    opt.node_count = nodes;
    opt.edge_probability = p;
    opt.seed = seed;
    opt.distinct_weights = distinct;
    opt.weights.quantum = quantum;
    return generate_random(opt);
}

// Creation counts per canonical path, duplicates included.
class CreationCounter : public HeavyPathObserver {
public:
    void on_create(const Path& p, bool /*duplicate*/) override {
        Path c = canonical(p);
        ++counts[{c.nodes().begin(), c.nodes().end()}];
    }
    std::map<std::vector<NodeId>, int> counts;
};

// At every solver step, checks that each length-l path which is neither
// stored, returned, nor producible from an already returned admissible
// shorter path weighs at most the current theta_l.
class ThetaSoundness : public HeavyPathObserver {
public:
    ThetaSoundness(const WeightedGraph& g, std::size_t max_length, bool ra) : g_(g), ra_(ra) {
        all_.resize(max_length + 1);
        for (std::size_t l = 2; l <= max_length; ++l) all_[l] = oracle_paths(g, l);
    }

    void on_step(const HeavyPathSolver& s) override {
        ++steps;
        for (std::size_t l = 2; l < all_.size(); ++l) {
            if (s.drained(l - 1)) continue;
            const double theta = s.threshold(l);
            for (const OraclePath& op : all_[l]) {
                if (op.weight <= theta) break;  // sorted heaviest first
                Path p = Path::from_nodes(g_, op.nodes);
                if (s.buffer(l).contains(p) || s.returned(l).contains(p)) continue;
                if (producible(s, op.nodes, l)) continue;
                ++violations;
                if (first_violation.empty()) {
                    first_violation = "l=" + std::to_string(l) + " weight " +
                                      format_weight(op.weight) + " > theta " +
                                      format_weight(theta);
                }
            }
        }
    }

    std::size_t steps = 0;
    std::size_t violations = 0;
    std::string first_violation;

private:
    bool returned_sub(const HeavyPathSolver& s, const std::vector<NodeId>& sub) const {
        if (sub.size() == 2) {
            auto e = g_.find_edge(sub[0], sub[1]);
            return s.edges().depth_of(*e) <= s.depth();
        }
        return s.returned(sub.size() - 1).contains(Path::from_nodes(g_, sub));
    }

    bool producible(const HeavyPathSolver& s, const std::vector<NodeId>& nodes,
                    std::size_t l) const {
        const double first = g_.weight(nodes[0], nodes[1]);
        const double last = g_.weight(nodes[l - 1], nodes[l]);
        std::vector<NodeId> left(nodes.begin(), nodes.end() - 1);
        std::vector<NodeId> right(nodes.begin() + 1, nodes.end());
        if ((!ra_ || last <= first) && returned_sub(s, left)) return true;
        if ((!ra_ || first <= last) && returned_sub(s, right)) return true;
        return false;
    }

    const WeightedGraph& g_;
    bool ra_;
    std::vector<std::vector<OraclePath>> all_;
};

// True when every per-length theta sequence in the trace is non-increasing.
inline bool trace_non_increasing(const std::vector<ThresholdTraceRow>& rows) {
    std::map<std::size_t, double> last;
    for (const ThresholdTraceRow& r : rows) {
        auto it = last.find(r.length);
        if (it != last.end() && r.theta > it->second) return false;
        last[r.length] = r.theta;
    }
    return true;
}

}  // namespace testing_support
