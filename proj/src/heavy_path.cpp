#include "heavypath/heavy_path.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

namespace heavypath {
namespace {

End opposite(End e) { return e == End::left ? End::right : End::left; }

}  // namespace

bool ra_admissible(const WeightedGraph& g, const Path& p, double edge_weight, End end,
                   bool ra_strategy) {
    if (!ra_strategy) return true;
    return edge_weight <= end_edge_weight(g, p, opposite(end));
}

double stitched_upper_bound(std::size_t length, std::size_t j,
                            const std::vector<double>& heaviest) {
    if (j < 2) throw std::invalid_argument("stitching needs j >= 2");
    const std::size_t seg = j - 1;
    const std::size_t q = length / seg;
    const std::size_t r = length - q * seg;
    double u = heaviest.at(seg) * static_cast<double>(q);
    if (r > 0) u += heaviest.at(r);
    return u;
}

HeavyPathSolver::HeavyPathSolver(const SortedEdgeList& edges, std::size_t max_length,
                                 HeavyPathOptions options)
    : edges_(&edges),
      g_(&edges.graph()),
      max_length_(max_length),
      options_(options),
      cursor_(edges),
      thresholds_(max_length, edges.graph().max_weight(), options.trace),
      heaviest_(max_length + 1),
      drained_(max_length + 1, 0) {
    if (max_length < 1) throw std::invalid_argument("path length must be >= 1");
    for (std::size_t l = 0; l <= max_length; ++l) {
        buffers_.emplace_back(l);
        returned_.emplace_back(l);
    }
    heaviest_[1] = g_->max_weight();
}

std::optional<double> HeavyPathSolver::heaviest_returned(std::size_t l) const {
    return heaviest_.at(l);
}

void HeavyPathSolver::notify() const {
    if (options_.observer) options_.observer->on_step(*this);
}

std::optional<Path> HeavyPathSolver::sorted_access() {
    auto idx = cursor_.next();
    if (!idx) {
        drained_[1] = 1;
        return std::nullopt;
    }
    ++metrics_.edge_reads;
    metrics_.depth = cursor_.depth();
    const Edge& e = g_->edge(*idx);
    if (max_length_ >= 2 && !heuristic_) {
        thresholds_.set(2, 2.0 * e.weight, TraceTrigger::sorted_access);
    }
    notify();
    return Path::from_edge(e);
}

std::optional<Path> HeavyPathSolver::next(std::size_t l) {
    if (l < 1 || l > max_length_) throw std::out_of_range("level out of range");
    if (heuristic_) throw std::logic_error("exact search is over once the heuristic took over");
    if (l == 1) return sorted_access();

    PathBuffer& b = buffers_[l];
    // Strictly above theta_l, or at any weight once level l-1 can add nothing.
    while (b.empty() || (b.top_score() <= thresholds_.get(l) && !drained_[l - 1])) {
        if (drained_[l - 1]) {
            drained_[l] = 1;
            return std::nullopt;
        }
        auto q = next(l - 1);
        if (!q) continue;
        pending_ = *q;
        expand(*q);
        pending_.reset();
    }
    return pop(l);
}

Path HeavyPathSolver::pop(std::size_t l) {
    PathBuffer& b = buffers_[l];
    Path p = b.remove_top();
    --stored_;
    returned_[l].insert(p);
    if (!heaviest_[l]) heaviest_[l] = p.weight();
    if (l < max_length_ && !heuristic_) {
        const double theta = std::max(b.top_score(), thresholds_.get(l)) + g_->max_weight();
        thresholds_.set(l + 1, theta, TraceTrigger::path_return);
    }
    if (!heuristic_) notify();
    return p;
}

void HeavyPathSolver::expand(const Path& q) {
    for (End end : {End::right, End::left}) {
        auto nbrs = g_->neighbors(q.end_node(end));
        auto first = nbrs.begin();
        if (options_.ra_strategy) {
            // Adjacency is weight-descending: skip, unread, everything heavier
            // than the opposite end edge.
            const double bound = end_edge_weight(*g_, q, opposite(end));
            first = std::partition_point(nbrs.begin(), nbrs.end(),
                                         [&](const Neighbor& n) { return n.weight > bound; });
        }
        for (auto it = first; it != nbrs.end(); ++it) {
            ++metrics_.edge_reads;
            auto p = extend(*g_, q, it->node, end, it->weight);
            if (p) store(std::move(*p), true);
        }
    }
}

void HeavyPathSolver::expand_all(const Path& q) {
    for (End end : {End::right, End::left}) {
        for (const Neighbor& n : g_->neighbors(q.end_node(end))) {
            ++metrics_.edge_reads;
            auto p = extend(*g_, q, n.node, end, n.weight);
            if (p) store(std::move(*p), false);
        }
    }
}

bool HeavyPathSolver::store(Path p, bool enforce_capacity) {
    const std::size_t l = p.length();
    if (buffers_[l].contains(p) || returned_[l].contains(p)) {
        ++metrics_.joins;
        ++metrics_.duplicates_discarded;
        if (options_.observer) options_.observer->on_create(p, true);
        return false;
    }
    if (enforce_capacity && options_.capacity && stored_ + 1 > *options_.capacity) {
        throw CapacityExceeded("buffer capacity of " + std::to_string(*options_.capacity) +
                               " paths exceeded");
    }
    ++metrics_.joins;
    if (options_.observer) options_.observer->on_create(p, false);
    buffers_[l].insert(p);
    ++stored_;
    metrics_.count_path(l);
    metrics_.observe_stored(stored_);
    return true;
}

void HeavyPathSolver::enter_heuristic() {
    heuristic_ = true;
    if (pending_) {
        const std::size_t len = pending_->length();
        if (len == 1) {
            pending_edges_.push_back(*pending_);
        } else if (buffers_[len].insert(*pending_) == InsertOutcome::inserted) {
            ++stored_;
        }
        pending_.reset();
    }
    heuristic_j_ = 2;
    for (std::size_t l = max_length_; l >= 2; --l) {
        if (!buffers_[l].empty()) {
            heuristic_j_ = l;
            break;
        }
    }
    std::vector<double> u(max_length_ + 1, 0.0);
    for (std::size_t l = 1; l < heuristic_j_; ++l) {
        if (!heaviest_[l]) {
            throw std::logic_error("heaviest length-" + std::to_string(l) +
                                   " path unknown at heuristic takeover");
        }
        u[l] = *heaviest_[l];
    }
    heuristic_u_ell_ = stitched_upper_bound(max_length_, heuristic_j_, u);
}

HeuristicResult HeavyPathSolver::next_heuristic() {
    if (max_length_ < 2) throw std::logic_error("heuristic needs length >= 2");
    if (!heuristic_) enter_heuristic();
    PathBuffer& last = buffers_[max_length_];
    while (last.empty()) {
        std::size_t i = 0;
        for (std::size_t l = max_length_ - 1; l >= 2; --l) {
            if (!buffers_[l].empty()) {
                i = l;
                break;
            }
        }
        if (i != 0) {
            expand_all(pop(i));
        } else if (!pending_edges_.empty()) {
            Path q = pending_edges_.front();
            pending_edges_.erase(pending_edges_.begin());
            expand_all(q);
        } else if (auto q = sorted_access()) {
            expand_all(*q);
        } else {
            throw HeuristicFailure("heuristic exhausted every buffer and the edge list without "
                                   "reaching a path of length " +
                                   std::to_string(max_length_));
        }
    }
    Path p = pop(max_length_);
    HeuristicResult r;
    r.rho = heuristic_u_ell_ > 0.0 ? p.weight() / heuristic_u_ell_ : 1.0;
    r.u_ell = heuristic_u_ell_;
    r.j = heuristic_j_;
    r.path = std::move(p);
    return r;
}

HeavyPathResult heavy_path_topk(const SortedEdgeList& edges, std::size_t length, std::size_t k,
                                const HeavyPathOptions& options) {
    require_query(length, k);
    const auto start = std::chrono::steady_clock::now();
    HeavyPathResult result;
    HeavyPathSolver solver(edges, length, options);
    try {
        while (result.paths.size() < k) {
            auto p = solver.next(length);
            if (!p) break;
            result.paths.push_back(std::move(*p));
        }
    } catch (const CapacityExceeded&) {
        if (!options.heuristic) throw;
        while (result.paths.size() < k) {
            HeuristicResult h;
            try {
                h = solver.next_heuristic();
            } catch (const HeuristicFailure&) {
                if (!result.heuristic && result.paths.empty()) throw;
                break;
            }
            if (!result.heuristic) result.heuristic = h;
            result.paths.push_back(h.path);
        }
    }
    result.metrics = solver.metrics();
    result.metrics.depth = solver.depth();
    result.status = result.paths.size() < k ? RunStatus::exhausted : RunStatus::complete;
    result.metrics.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace heavypath
