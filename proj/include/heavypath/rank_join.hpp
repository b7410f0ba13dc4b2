// Multi-way Rank Join specialized to the heavy path self-join.
//
// Edges are read in sorted order. Each new edge is immediately joined with
// the edges seen so far into every simple path of the requested length that
// contains it; the k heaviest are retained. After a read at depth d the
// threshold is theta = w_d + (L - 1) * w_max, and the run stops once k
// retained paths weigh at least theta.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "heavypath/graph.hpp"
#include "heavypath/solver.hpp"

namespace heavypath {

struct RankJoinOptions {
    // Upper bound on constructed length-L paths; exceeding it throws
    // ResourceError.
    std::optional<std::uint64_t> path_cap;
    ThresholdTrace* trace = nullptr;
};

struct RankJoinResult : TopKResult {
    double theta = 0.0;                 // threshold after the last read
    bool stopped_by_threshold = false;  // false: the edge list ran out first
};

RankJoinResult rank_join_topk(const SortedEdgeList& edges, std::size_t length, std::size_t k,
                              const RankJoinOptions& options = {});

// Sorted-access depth at which a top-1 run terminates.
std::size_t rank_join_depth_probe(const SortedEdgeList& edges, std::size_t length);

}  // namespace heavypath
