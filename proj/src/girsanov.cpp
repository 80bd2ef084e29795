#include "ghawkes/girsanov.hpp"

#include "ghawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghawkes {

double m_function(double x) {
    if (!(x >= -1.0)) {
        throw std::domain_error("m is defined on [-1, inf), got " + std::to_string(x));
    }
    if (x == -1.0) return 1.0;
    return (x + 1.0) * std::log1p(x) - x;
}

namespace {

void check_horizon(double horizon) {
    if (!std::isfinite(horizon) || horizon < 0.0) {
        throw std::invalid_argument("horizon must be finite and >= 0");
    }
}

// Interior split points of [0, horizon]: jump times, piecewise-constant model
// breakpoints, and tabulated-kernel knot offsets.  Between consecutive splits
// the rate with a pinned event count is smooth.
std::vector<double> original_axis_splits(const TimeChange& tc, double horizon) {
    std::vector<double> splits;
    for (const double t : tc.path().times()) {
        if (t > 0.0 && t < horizon) splits.push_back(t);
    }
    if (const auto* pc = std::get_if<PiecewiseConstantIntensity>(&tc.model())) {
        for (const double b : pc->breakpoints) {
            if (b > 0.0 && b < horizon) splits.push_back(b);
        }
    }
    if (const auto* hk = std::get_if<ClassicalHawkesIntensity>(&tc.model())) {
        if (hk->kernel.kind == KernelSpec::Kind::tabulated) {
            for (const double t : tc.path().times()) {
                for (const double knot : hk->kernel.grid_t) {
                    const double p = t + knot;
                    if (p > 0.0 && p < horizon) splits.push_back(p);
                }
            }
        }
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    return splits;
}

// Splits refined so that ydot - 1 does not change sign inside a piece; the
// rate with a pinned event count is monotone on each refined piece for the
// built-in model families, so an endpoint sign check finds every crossing.
std::vector<double> splits_with_unit_crossings(const TimeChange& tc, double horizon,
                                               const std::vector<double>& base_splits) {
    std::vector<double> out = base_splits;
    double lo = 0.0;
    std::vector<double> edges = base_splits;
    edges.push_back(horizon);
    for (const double hi : edges) {
        if (hi <= lo) continue;
        const std::size_t k = tc.path().count_before(0.5 * (lo + hi));
        const double glo = tc.rate_given(k, lo) - 1.0;
        const double ghi = tc.rate_given(k, hi) - 1.0;
        if ((glo > 0.0 && ghi < 0.0) || (glo < 0.0 && ghi > 0.0)) {
            double a = lo, b = hi;
            for (int i = 0; i < 80 && b - a > 1e-14 * (std::abs(a) + 1.0); ++i) {
                const double m = 0.5 * (a + b);
                const double gm = tc.rate_given(k, m) - 1.0;
                if ((gm > 0.0) == (glo > 0.0)) {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        lo = hi;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Integral over [0, horizon] of g(ydot(s)), split at the given points.
template <typename G>
double integrate_of_rate(const TimeChange& tc, double horizon, const std::vector<double>& splits,
                         G&& g) {
    if (horizon <= 0.0) return 0.0;
    const NumericOptions& opts = tc.options();
    double total = 0.0;
    double lo = 0.0;
    std::vector<double> edges = splits;
    edges.push_back(horizon);
    for (const double hi : edges) {
        if (hi <= lo) continue;
        const std::size_t k = tc.path().count_before(0.5 * (lo + hi));
        total += integrate_adaptive([&](double s) { return g(tc.rate_given(k, s)); }, lo, hi,
                                    opts.quad_abs_tol, opts.quad_max_intervals);
        lo = hi;
    }
    return total;
}

// Integral over the image axis [0, y(horizon)] of g(ydot*(s)), evaluated
// through the numeric inverse and split at the images of the original splits.
template <typename G>
double integrate_of_inverse_rate(const TimeChange& tc, double horizon,
                                 const std::vector<double>& splits, G&& g) {
    if (horizon <= 0.0) return 0.0;
    const NumericOptions& opts = tc.options();
    const double image_end = tc.value(horizon);
    std::vector<double> image_splits;
    image_splits.reserve(splits.size());
    for (const double s : splits) image_splits.push_back(tc.value(s));
    const auto integrand = [&](double s) {
        const double t = tc.inverse(s);
        const std::size_t k = tc.path().count_before(t);
        return g(1.0 / tc.rate_given(k, t));
    };
    double total = 0.0;
    double lo = 0.0;
    image_splits.push_back(image_end);
    for (const double hi : image_splits) {
        if (hi <= lo) continue;
        total += integrate_adaptive(integrand, lo, hi, opts.quad_abs_tol, opts.quad_max_intervals);
        lo = hi;
    }
    return total;
}

// Quadrature of a nonnegative integrand may come back a hair below zero.
double clamp_noise(double v) { return (v < 0.0 && v > -1e-9) ? 0.0 : v; }

} // namespace

double log_density(const IntensityModel& model, const Configuration& path, double horizon,
                   const NumericOptions& opts) {
    check_horizon(horizon);
    TimeChange tc(model, path, opts);
    double jump_sum = 0.0;
    const auto& times = path.times();
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (times[k] > horizon) break;
        const double rate = tc.rate(times[k]); // events strictly before T_k
        const double lg = std::log(rate);
        if (!std::isfinite(lg)) {
            throw numeric_error("log intensity is not finite at jump time " +
                                    std::to_string(times[k]),
                                rate);
        }
        jump_sum += lg;
    }
    return jump_sum + horizon - tc.value(horizon);
}

PathFunctionals path_functionals(const IntensityModel& model, const Configuration& path,
                                 double horizon, double p, const PathFunctionalOptions& opts) {
    check_horizon(horizon);
    if (!(p >= 1.0)) {
        throw std::invalid_argument("p must be >= 1");
    }
    TimeChange tc(model, path, opts.numerics);
    PathFunctionals out;
    out.p = p;
    out.horizon = horizon;

    const std::vector<double> splits = original_axis_splits(tc, horizon);

    double jump_sum = 0.0;
    for (const double t : path.times()) {
        if (t > horizon) break;
        const double lg = std::log(tc.rate(t));
        if (!std::isfinite(lg)) {
            throw numeric_error("log intensity is not finite at jump time " + std::to_string(t),
                                tc.rate(t));
        }
        jump_sum += lg;
    }
    out.log_lambda = jump_sum + horizon - tc.value(horizon);

    out.entropy_n_side = clamp_noise(integrate_of_rate(
        tc, horizon, splits, [](double r) { return r - 1.0 - std::log(r); }));
    // Substituted image-axis integral: m(ydot* - 1) ds with s = y(u) becomes
    // m(1/ydot - 1) ydot du on the original axis.
    out.entropy_ystar_side = clamp_noise(integrate_of_rate(
        tc, horizon, splits, [](double r) { return m_function(1.0 / r - 1.0) * r; }));

    const std::vector<double> pn_splits = splits_with_unit_crossings(tc, horizon, splits);
    out.pnorm_side_b = clamp_noise(integrate_of_rate(
        tc, horizon, pn_splits, [p](double r) { return std::pow(std::abs(r - 1.0), p); }));
    out.pnorm_side_a = clamp_noise(integrate_of_inverse_rate(
        tc, horizon, pn_splits,
        [p](double inv_rate) { return std::pow(std::abs(1.0 / inv_rate - 1.0), p) * inv_rate; }));

    out.l1_deviation = clamp_noise(
        integrate_of_rate(tc, horizon, pn_splits, [](double r) { return std::abs(r - 1.0); }));
    out.l1_flagged = out.l1_deviation > opts.l1_flag_bound;
    return out;
}

double entropy_image_axis_direct(const IntensityModel& model, const Configuration& path,
                                 double horizon, const NumericOptions& opts) {
    check_horizon(horizon);
    TimeChange tc(model, path, opts);
    const std::vector<double> splits = original_axis_splits(tc, horizon);
    return clamp_noise(integrate_of_inverse_rate(
        tc, horizon, splits, [](double inv_rate) { return m_function(inv_rate - 1.0); }));
}

} // namespace ghawkes
