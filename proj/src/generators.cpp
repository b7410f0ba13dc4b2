#include "heavypath/generators.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>

namespace heavypath {

WeightedGraph normalize_for_lightest(const WeightedGraph& g) {
    if (g.edge_count() == 0) throw GraphError("cannot normalize an edgeless graph");
    const double w_max = g.max_weight();
    if (!(w_max > 0.0)) throw GraphError("cannot normalize: maximum edge weight is 0");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.weight = 1.0 - e.weight / w_max;
    return WeightedGraph(g.node_count(), std::move(edges),
                         std::vector<std::string>(g.labels().begin(), g.labels().end()));
}

WeightedGraph build_cooccurrence_graph(const std::vector<Session>& sessions, double min_weight) {
    if (!(min_weight >= 0.0 && min_weight <= 1.0)) {
        throw GraphError("min_weight must lie in [0,1]");
    }
    std::map<std::string, std::size_t> item_count;
    std::map<std::pair<std::string, std::string>, std::size_t> pair_count;
    for (const Session& s : sessions) {
        std::set<std::string> items(s.begin(), s.end());
        for (const auto& i : items) ++item_count[i];
        for (auto a = items.begin(); a != items.end(); ++a) {
            for (auto b = std::next(a); b != items.end(); ++b) ++pair_count[{*a, *b}];
        }
    }
    std::vector<std::string> labels;
    std::map<std::string, NodeId> id;
    for (const auto& [item, _] : item_count) {
        id[item] = static_cast<NodeId>(labels.size());
        labels.push_back(item);
    }
    std::vector<Edge> edges;
    for (const auto& [pair, both] : pair_count) {
        const double dice = 2.0 * static_cast<double>(both) /
                            static_cast<double>(item_count[pair.first] + item_count[pair.second]);
        if (dice >= min_weight) edges.push_back({id[pair.first], id[pair.second], dice});
    }
    const std::size_t node_count = labels.size();
    return WeightedGraph(node_count, std::move(edges), std::move(labels));
}

WeightedGraph generate_fig3(std::size_t n) {
    if (n < 1) throw GraphError("fig3 generator needs n >= 1");
    std::vector<std::string> labels = {"a", "b", "c", "d", "a'", "b'", "c'"};
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("d'" + std::to_string(i));
    std::vector<Edge> edges = {
        {0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 0.001}, {4, 5, 0.03}, {5, 6, 0.02},
    };
    for (std::size_t i = 0; i < n; ++i) edges.push_back({6, static_cast<NodeId>(7 + i), 0.01});
    const std::size_t node_count = labels.size();
    return WeightedGraph(node_count, std::move(edges), std::move(labels));
}

namespace {

double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw_weight(std::mt19937_64& rng, const WeightDistribution& dist) {
    double w = dist.lo + (dist.hi - dist.lo) * unit_interval(rng);
    if (dist.quantum > 0.0) w = std::floor(w / dist.quantum) * dist.quantum;
    return w;
}

}  // namespace

WeightedGraph generate_random(const RandomGraphOptions& options) {
    if (!(options.edge_probability >= 0.0 && options.edge_probability <= 1.0)) {
        throw GraphError("edge probability must lie in [0,1]");
    }
    if (options.weights.lo < 0.0 || options.weights.hi < options.weights.lo) {
        throw GraphError("weight range must satisfy 0 <= lo <= hi");
    }
    std::mt19937_64 rng(options.seed);
    std::vector<Edge> edges;
    std::set<double> used;
    const auto n = static_cast<NodeId>(options.node_count);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (options.edge_probability < 1.0 && !(unit_interval(rng) < options.edge_probability)) {
                continue;
            }
            double w = draw_weight(rng, options.weights);
            if (options.distinct_weights) {
                for (int attempt = 0; used.count(w) != 0; ++attempt) {
                    if (attempt > 1000) throw GraphError("cannot draw distinct weights");
                    w = draw_weight(rng, options.weights);
                }
                used.insert(w);
            }
            edges.push_back({u, v, w});
        }
    }
    return WeightedGraph(options.node_count, std::move(edges));
}

}  // namespace heavypath
