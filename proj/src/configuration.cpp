#include "ghawkes/configuration.hpp"

#include "ghawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ghawkes {

namespace {

void check_time_argument(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("time argument must be finite and >= 0, got " +
                                    std::to_string(t));
    }
}

} // namespace

Configuration::Configuration(std::vector<double> jump_times) : times_(std::move(jump_times)) {
    for (std::size_t i = 0; i < times_.size(); ++i) {
        const double t = times_[i];
        if (!std::isfinite(t)) {
            throw std::invalid_argument("jump times must be finite");
        }
        if (t <= 0.0) {
            throw std::invalid_argument("jump times must be strictly positive, got " +
                                        std::to_string(t));
        }
        if (i > 0) {
            if (times_[i - 1] == t) {
                throw simplicity_error("duplicate jump time " + std::to_string(t) +
                                       ": configurations must be simple");
            }
            if (times_[i - 1] > t) {
                throw std::invalid_argument("jump times must be strictly increasing");
            }
        }
    }
}

std::size_t Configuration::count(double t) const {
    check_time_argument(t);
    return static_cast<std::size_t>(
        std::upper_bound(times_.begin(), times_.end(), t) - times_.begin());
}

std::size_t Configuration::count_before(double t) const {
    return static_cast<std::size_t>(
        std::lower_bound(times_.begin(), times_.end(), t) - times_.begin());
}

Configuration Configuration::stopped(double a) const {
    check_time_argument(a);
    const std::size_t n = count(a);
    Configuration out;
    out.times_.assign(times_.begin(), times_.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

std::size_t diff_count(const Configuration& omega, const Configuration& eta, double t) {
    const std::size_t a = omega.count(t);
    const std::size_t b = eta.count(t);
    return a > b ? a - b : b - a;
}

} // namespace ghawkes
