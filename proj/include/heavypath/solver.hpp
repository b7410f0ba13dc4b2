// Result and error types shared by all top-k solvers.

#pragma once

#include <stdexcept>
#include <vector>

#include "heavypath/metrics.hpp"
#include "heavypath/path.hpp"

namespace heavypath {

// A solver hit a configured resource bound (state count, path capacity).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RunStatus {
    complete,   // k paths returned
    exhausted,  // fewer than k simple paths of the requested length exist
};

struct TopKResult {
    std::vector<Path> paths;  // canonical, in RankOrder
    RunStatus status = RunStatus::complete;
    RunMetrics metrics;
};

inline void require_query(std::size_t length, std::size_t k) {
    if (length < 1) throw std::invalid_argument("path length must be >= 1");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
}

}  // namespace heavypath
