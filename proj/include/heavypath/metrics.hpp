// Work counters and threshold-decay traces collected by every solver run.
//
// Edge-read convention: every edge record read under sorted access, under
// random access (an adjacency entry examined), or while composing a join
// counts as one read. Lookups that find no edge count zero.

#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace heavypath {

struct RunMetrics {
    std::uint64_t edge_reads = 0;
    std::uint64_t joins = 0;
    // Rank Join counts length-l paths only; HeavyPath counts every stored path.
    std::uint64_t paths_constructed = 0;
    std::vector<std::uint64_t> paths_by_length;  // index = path length
    std::uint64_t duplicates_discarded = 0;
    std::uint64_t depth = 0;  // sorted-access depth at termination
    std::uint64_t peak_stored_paths = 0;
    std::uint64_t restarts = 0;  // greedy seed restarts
    std::chrono::nanoseconds wall_time{0};

    void count_path(std::size_t length) {
        ++paths_constructed;
        if (paths_by_length.size() <= length) paths_by_length.resize(length + 1, 0);
        ++paths_by_length[length];
    }
    void observe_stored(std::uint64_t stored) {
        if (stored > peak_stored_paths) peak_stored_paths = stored;
    }
};

enum class TraceTrigger { sorted_access, path_return };

std::string to_string(TraceTrigger t);

struct ThresholdTraceRow {
    std::uint64_t event = 0;
    std::size_t length = 0;
    double theta = 0.0;
    TraceTrigger trigger = TraceTrigger::sorted_access;
};

// Append-only trace shared by one run. Disabled traces drop rows.
class ThresholdTrace {
public:
    explicit ThresholdTrace(bool enabled = false) : enabled_(enabled) {}

    void record(std::size_t length, double theta, TraceTrigger trigger) {
        if (enabled_) rows_.push_back({next_event_++, length, theta, trigger});
    }
    bool enabled() const { return enabled_; }
    const std::vector<ThresholdTraceRow>& rows() const { return rows_; }

private:
    bool enabled_;
    std::uint64_t next_event_ = 0;
    std::vector<ThresholdTraceRow> rows_;
};

// Per-length thresholds theta_2..theta_L with trace hooks.
class ThresholdState {
public:
    ThresholdState(std::size_t max_length, double w_max, ThresholdTrace* trace);

    double get(std::size_t length) const { return theta_.at(length); }
    void set(std::size_t length, double value, TraceTrigger trigger);
    std::size_t max_length() const { return theta_.empty() ? 0 : theta_.size() - 1; }

private:
    std::vector<double> theta_;  // index = length; entries 0 and 1 unused
    ThresholdTrace* trace_;
};

}  // namespace heavypath
