// Run orchestration shared by the CLI and the tests: a uniform entry point
// over all solvers, metrics/trace CSV I/O, and cross-solver comparison.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heavypath/graph.hpp"
#include "heavypath/heavy_path.hpp"
#include "heavypath/solver.hpp"

namespace heavypath {

enum class Algo { dfs, dp, greedy, rankjoin, heavypath };

std::string to_string(Algo a);
// Throws std::invalid_argument on an unknown name.
Algo parse_algo(const std::string& name);
bool is_exact(Algo a);

struct RunConfig {
    Algo algo = Algo::dfs;
    std::size_t length = 1;
    std::size_t k = 1;
    bool ra_strategy = true;                 // heavypath only
    std::optional<std::uint64_t> capacity;   // heavypath: heuristic takeover; rankjoin: path cap
    std::size_t dp_max_states = 10'000'000;
    ThresholdTrace* trace = nullptr;         // heavypath and rankjoin
};

struct RunOutcome {
    TopKResult result;
    std::optional<HeuristicResult> heuristic;
};

// Dispatches to the configured solver. Greedy requires k == 1.
RunOutcome run_solver(const SortedEdgeList& edges, const RunConfig& config);

struct MetricsRow {
    std::string algo;
    std::string instance;
    std::uint64_t length = 0;
    std::uint64_t k = 0;
    std::string ra_strategy;  // on | off | -
    std::string capacity;     // number or -
    std::uint64_t edge_reads = 0;
    std::uint64_t joins = 0;
    std::uint64_t paths_constructed = 0;
    std::uint64_t duplicates_discarded = 0;
    std::uint64_t depth = 0;
    std::uint64_t peak_stored_paths = 0;
    double wall_ms = 0.0;
    std::string status;  // complete | exhausted | heuristic | error

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

extern const char* const kMetricsHeader;
extern const char* const kTraceHeader;

MetricsRow make_metrics_row(const std::string& instance, const RunConfig& config,
                            const RunOutcome& outcome);

void write_metrics_csv(std::ostream& out, const std::vector<MetricsRow>& rows);
// Throws std::runtime_error on a bad header or malformed row.
std::vector<MetricsRow> parse_metrics_csv(std::istream& in);

void write_trace_csv(std::ostream& out, const ThresholdTrace& trace);
std::vector<ThresholdTraceRow> parse_trace_csv(std::istream& in);

using SolverFn = std::function<RunOutcome(const SortedEdgeList&, const RunConfig&)>;

struct CompareEntry {
    RunConfig config;
    SolverFn solver = run_solver;  // replaceable to self-test the harness
};

struct CompareReport {
    bool match = true;
    std::vector<MetricsRow> rows;
    std::vector<RunOutcome> outcomes;
    std::vector<std::string> mismatches;
};

// Runs every entry concurrently over the shared immutable edge list, then
// checks that all exact solvers agree on weights and canonical sequences.
// Sub-run exceptions propagate.
CompareReport compare_runs(const SortedEdgeList& edges, const std::string& instance,
                           const std::vector<CompareEntry>& entries);

}  // namespace heavypath
