// Weight transforms, session co-occurrence graphs and synthetic instances.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heavypath/graph.hpp"

namespace heavypath {

// w' = 1 - w / w_max, turning a lightest-path (l-TSP style) instance into a
// heaviest-path one. Throws GraphError on an edgeless graph or w_max == 0.
WeightedGraph normalize_for_lightest(const WeightedGraph& g);

using Session = std::vector<std::string>;

// Edge (i,j) weighted by the Dice coefficient 2|i∩j| / (|i|+|j|), where |i|
// counts sessions containing item i. Kept iff the items co-occur at least
// once and the coefficient is >= min_weight. Repeated items inside a
// session count once. Node labels are item names in lexicographic order.
WeightedGraph build_cooccurrence_graph(const std::vector<Session>& sessions,
                                       double min_weight = 0.1);

// One heavy chain a-b-c-d (1, 1, 0.001) plus a light chain a'-b'-c'
// (0.03, 0.02) fanning out to n leaves d'_i through edges of weight 0.01.
WeightedGraph generate_fig3(std::size_t n);

struct WeightDistribution {
    double lo = 0.0;
    double hi = 1.0;
    // When positive, weights are rounded down to a multiple of quantum, which
    // makes ties likely.
    double quantum = 0.0;
};

struct RandomGraphOptions {
    std::size_t node_count = 10;
    double edge_probability = 0.5;
    WeightDistribution weights;
    std::uint64_t seed = 1;
    bool distinct_weights = false;
};

// G(n, p) with independent weights. Deterministic for a given seed across
// platforms (weights are derived from raw mt19937_64 output, not from a
// library distribution).
WeightedGraph generate_random(const RandomGraphOptions& options);

}  // namespace heavypath
