#include "heavypath/metrics.hpp"

namespace heavypath {

std::string to_string(TraceTrigger t) {
    return t == TraceTrigger::sorted_access ? "sorted-access" : "path-return";
}

ThresholdState::ThresholdState(std::size_t max_length, double w_max, ThresholdTrace* trace)
    : theta_(max_length + 1, 0.0), trace_(trace) {
    for (std::size_t l = 2; l <= max_length; ++l) theta_[l] = w_max * static_cast<double>(l);
}

void ThresholdState::set(std::size_t length, double value, TraceTrigger trigger) {
    theta_.at(length) = value;
    if (trace_) trace_->record(length, value, trigger);
}

}  // namespace heavypath
