// HeavyPath: lazy, per-length best-first path construction with aggressive
// thresholds, the end-edge random access filter, and the capacity-bounded
// heuristic takeover.
//
// Level 1 is sorted access over the edge list. Level l >= 2 owns a buffer
// B_l and a threshold theta_l bounding every length-l path that cannot yet be
// produced. next(l) pulls paths from level l-1, extends them at both ends
// into B_l, and returns the top of B_l once it rises above theta_l.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "heavypath/graph.hpp"
#include "heavypath/solver.hpp"

namespace heavypath {

class HeavyPathSolver;

// Read-only hooks for instrumentation. Called synchronously by the solver.
class HeavyPathObserver {
public:
    virtual ~HeavyPathObserver() = default;
    // Every composition of a new path, including ones discarded as duplicates.
    virtual void on_create(const Path& /*path*/, bool /*duplicate*/) {}
    // After each sorted access and each path return, once thresholds are set.
    virtual void on_step(const HeavyPathSolver& /*solver*/) {}
};

struct HeavyPathOptions {
    bool ra_strategy = true;
    // Maximum number of paths held in B_2..B_L together.
    std::optional<std::uint64_t> capacity;
    // On a capacity hit: true hands over to the heuristic, false throws.
    bool heuristic = false;
    ThresholdTrace* trace = nullptr;
    HeavyPathObserver* observer = nullptr;
};

// Thrown from next() when an insert would exceed the configured capacity.
class CapacityExceeded : public ResourceError {
public:
    using ResourceError::ResourceError;
};

// Thrown when the heuristic runs out of stored state before reaching length L.
class HeuristicFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HeuristicResult {
    Path path;
    double rho = 0.0;
    double u_ell = 0.0;
    std::size_t j = 0;  // last non-empty buffer index at takeover
};

// True when edge weight `edge_weight` may extend p at `end`: it must be no
// heavier than the edge at p's opposite end. Always true with the filter off.
bool ra_admissible(const WeightedGraph& g, const Path& p, double edge_weight, End end,
                   bool ra_strategy = true);

// Pessimistic bound on any length-`length` path stitched from the heaviest
// known shorter paths: with q = floor(L/(j-1)) and r = L - q(j-1),
// U_L = q * U_{j-1} (+ U_r when r > 0). `heaviest[l]` holds U_l.
double stitched_upper_bound(std::size_t length, std::size_t j,
                            const std::vector<double>& heaviest);

class HeavyPathSolver {
public:
    HeavyPathSolver(const SortedEdgeList& edges, std::size_t max_length,
                    HeavyPathOptions options = {});

    // Next heaviest length-l path, 1 <= l <= max_length; nullopt once every
    // length-l path has been returned.
    std::optional<Path> next(std::size_t l);

    // Switches to heuristic search after next() threw CapacityExceeded and
    // returns the first heuristic length-L path. Later calls continue from the
    // same state and return the following ones.
    HeuristicResult next_heuristic();
    bool in_heuristic() const { return heuristic_; }

    const WeightedGraph& graph() const { return *g_; }
    std::size_t max_length() const { return max_length_; }
    const PathBuffer& buffer(std::size_t l) const { return buffers_.at(l); }
    // Paths already returned at level l >= 2.
    const PathBuffer& returned(std::size_t l) const { return returned_.at(l); }
    double threshold(std::size_t l) const { return thresholds_.get(l); }
    // U_l, the weight of the first path returned at length l (U_1 = w_max).
    std::optional<double> heaviest_returned(std::size_t l) const;
    // No further path of length l will be returned.
    bool drained(std::size_t l) const { return drained_.at(l); }
    std::size_t depth() const { return cursor_.depth(); }
    const SortedEdgeList& edges() const { return *edges_; }
    std::uint64_t stored_paths() const { return stored_; }
    RunMetrics& metrics() { return metrics_; }
    const RunMetrics& metrics() const { return metrics_; }

private:
    std::optional<Path> sorted_access();
    void expand(const Path& q);
    void expand_all(const Path& q);
    bool store(Path p, bool enforce_capacity);
    Path pop(std::size_t l);
    void enter_heuristic();
    void notify() const;

    const SortedEdgeList* edges_;
    const WeightedGraph* g_;
    std::size_t max_length_;
    HeavyPathOptions options_;
    EdgeCursor cursor_;
    ThresholdState thresholds_;
    std::vector<PathBuffer> buffers_;   // index = length; 0 and 1 unused
    std::vector<PathBuffer> returned_;  // index = length; 0 and 1 unused
    std::vector<std::optional<double>> heaviest_;
    std::vector<char> drained_;
    std::uint64_t stored_ = 0;
    std::optional<Path> pending_;  // path whose expansion hit the capacity
    RunMetrics metrics_;

    bool heuristic_ = false;
    std::vector<Path> pending_edges_;  // level-1 frontier in heuristic mode
    std::size_t heuristic_j_ = 0;
    double heuristic_u_ell_ = 0.0;
};

struct HeavyPathResult : TopKResult {
    // Present when the capacity was hit and the heuristic produced the tail.
    std::optional<HeuristicResult> heuristic;
};

HeavyPathResult heavy_path_topk(const SortedEdgeList& edges, std::size_t length, std::size_t k,
                                const HeavyPathOptions& options = {});

}  // namespace heavypath
