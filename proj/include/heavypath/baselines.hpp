// Exhaustive and classical baselines: depth-limited DFS (the correctness
// oracle for every other solver), the avoidance-set dynamic program, and the
// greedy heaviest-edge-following heuristic.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "heavypath/graph.hpp"
#include "heavypath/solver.hpp"

namespace heavypath {

// Calls visit(path) once per simple path of `length` edges, in canonical
// orientation, ordered by start node then DFS order.
void for_each_simple_path(const WeightedGraph& g, std::size_t length,
                          const std::function<void(const Path&)>& visit);

// All simple paths of `length` edges, canonical and sorted by RankOrder.
std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, std::size_t length);

TopKResult dfs_topk(const WeightedGraph& g, std::size_t length, std::size_t k);

struct DpOptions {
    // Bound on memoized (end node, length, avoidance set) keys.
    std::size_t max_states = 10'000'000;
};

// Heaviest S-avoiding path recursion with memoized, lazily ranked
// per-key candidate lists. Throws ResourceError past options.max_states.
TopKResult dp_topk(const WeightedGraph& g, std::size_t length, std::size_t k,
                   const DpOptions& options = {});

struct GreedyResult {
    std::optional<Path> path;  // nullopt when every seed edge failed
    RunMetrics metrics;
};

// Seeds from edges in sorted order; grows by the heaviest cycle-free edge at
// either end (ties: right end first, then lower edge key). A seed that gets
// stuck before `length` edges triggers a restart from the next seed.
GreedyResult greedy_path(const WeightedGraph& g, std::size_t length);

}  // namespace heavypath
