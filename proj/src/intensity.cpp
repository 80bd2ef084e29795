#include "ghawkes/intensity.hpp"

#include "ghawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ghawkes {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_positive(double v, const char* what) {
    require_finite(v, what);
    if (v <= 0.0) {
        throw std::invalid_argument(std::string(what) + " must be > 0, got " + std::to_string(v));
    }
}

void require_nonnegative(double v, const char* what) {
    require_finite(v, what);
    if (v < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be >= 0, got " + std::to_string(v));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// PhiSpec

PhiSpec PhiSpec::identity() { return PhiSpec{}; }

PhiSpec PhiSpec::affine(double slope, double intercept) {
    require_nonnegative(slope, "phi slope");
    require_finite(intercept, "phi intercept");
    PhiSpec phi;
    phi.kind = Kind::affine;
    phi.slope = slope;
    phi.intercept = intercept;
    return phi;
}

PhiSpec PhiSpec::clipped_linear(double slope, double floor) {
    require_nonnegative(slope, "phi slope");
    require_positive(floor, "phi floor");
    PhiSpec phi;
    phi.kind = Kind::clipped_linear;
    phi.slope = slope;
    phi.floor = floor;
    return phi;
}

PhiSpec PhiSpec::sigmoid(double scale, double midpoint, double max_value) {
    require_positive(scale, "phi scale");
    require_finite(midpoint, "phi midpoint");
    require_positive(max_value, "phi max");
    PhiSpec phi;
    phi.kind = Kind::sigmoid;
    phi.scale = scale;
    phi.midpoint = midpoint;
    phi.max_value = max_value;
    return phi;
}

double PhiSpec::operator()(double x) const {
    switch (kind) {
        case Kind::identity:
            return x;
        case Kind::affine:
            return slope * x + intercept;
        case Kind::clipped_linear:
            return std::max(slope * x, floor);
        case Kind::sigmoid:
            return max_value / (1.0 + std::exp(-(x - midpoint) / scale));
    }
    return x;
}

double PhiSpec::lipschitz() const {
    switch (kind) {
        case Kind::identity:
            return 1.0;
        case Kind::affine:
        case Kind::clipped_linear:
            return slope;
        case Kind::sigmoid:
            return max_value / (4.0 * scale);
    }
    return 1.0;
}

std::string PhiSpec::name() const {
    switch (kind) {
        case Kind::identity:
            return "identity";
        case Kind::affine:
            return "affine";
        case Kind::clipped_linear:
            return "clipped_linear";
        case Kind::sigmoid:
            return "sigmoid";
    }
    return "identity";
}

// ---------------------------------------------------------------------------
// KernelSpec

KernelSpec KernelSpec::exponential(double a, double b) {
    require_nonnegative(a, "kernel amplitude");
    require_positive(b, "kernel decay");
    KernelSpec k;
    k.kind = Kind::exponential;
    k.amplitude = a;
    k.decay = b;
    return k;
}

KernelSpec KernelSpec::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.empty()) {
        throw std::invalid_argument("tabulated kernel needs at least one grid point");
    }
    KernelSpec k;
    k.kind = Kind::tabulated;
    k.grid_t.reserve(points.size());
    k.grid_h.reserve(points.size());
    for (const auto& [t, h] : points) {
        require_finite(t, "tabulated kernel abscissa");
        require_nonnegative(h, "tabulated kernel value");
        if (!k.grid_t.empty() && t <= k.grid_t.back()) {
            throw std::invalid_argument("tabulated kernel grid must be strictly increasing");
        }
        k.grid_t.push_back(t);
        k.grid_h.push_back(h);
    }
    if (k.grid_t.front() != 0.0) {
        throw std::invalid_argument("tabulated kernel grid must start at t = 0");
    }
    return k;
}

double KernelSpec::operator()(double t) const {
    if (t < 0.0) return 0.0;
    if (kind == Kind::exponential) {
        return amplitude * std::exp(-decay * t);
    }
    if (t >= grid_t.back()) return 0.0;
    const auto it = std::upper_bound(grid_t.begin(), grid_t.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - grid_t.begin());
    if (hi == 0) return grid_h.front();
    const std::size_t lo = hi - 1;
    const double w = (t - grid_t[lo]) / (grid_t[hi] - grid_t[lo]);
    return grid_h[lo] + w * (grid_h[hi] - grid_h[lo]);
}

double KernelSpec::integral(double t) const {
    if (t <= 0.0) return 0.0;
    if (kind == Kind::exponential) {
        return amplitude / decay * -std::expm1(-decay * t);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < grid_t.size(); ++i) {
        const double a = grid_t[i];
        const double b = grid_t[i + 1];
        if (t <= a) break;
        if (t >= b) {
            acc += 0.5 * (grid_h[i] + grid_h[i + 1]) * (b - a);
        } else {
            acc += 0.5 * (grid_h[i] + (*this)(t)) * (t - a);
            break;
        }
    }
    return acc;
}

double KernelSpec::l1_norm() const {
    if (kind == Kind::exponential) return amplitude / decay;
    return integral(grid_t.back());
}

double KernelSpec::max_value() const {
    if (kind == Kind::exponential) return amplitude;
    return *std::max_element(grid_h.begin(), grid_h.end());
}

double KernelSpec::support_end() const {
    if (kind == Kind::exponential) return std::numeric_limits<double>::infinity();
    return grid_t.back();
}

std::string KernelSpec::name() const {
    return kind == Kind::exponential ? "exponential" : "tabulated";
}

// ---------------------------------------------------------------------------
// PiecewiseConstantIntensity

double PiecewiseConstantIntensity::rate_at(double t) const {
    // Left-continuous convention: level j applies on (t_j, t_{j+1}].
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
    std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());
    if (i == 0) return levels.empty() ? tail_level : levels.front();
    const std::size_t seg = i - 1;
    return seg < levels.size() ? levels[seg] : tail_level;
}

double PiecewiseConstantIntensity::integral(double t) const {
    if (t <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const double a = breakpoints[j];
        const double b = breakpoints[j + 1];
        if (t <= a) return acc;
        acc += levels[j] * (std::min(t, b) - a);
        if (t <= b) return acc;
    }
    return acc + tail_level * (t - breakpoints.back());
}

double PiecewiseConstantIntensity::integral_inverse(double s) const {
    if (s <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const double seg_mass = levels[j] * (breakpoints[j + 1] - breakpoints[j]);
        if (s <= acc + seg_mass) {
            return breakpoints[j] + (s - acc) / levels[j];
        }
        acc += seg_mass;
    }
    return breakpoints.back() + (s - acc) / tail_level;
}

// ---------------------------------------------------------------------------
// Model constructors and inspection

IntensityModel make_constant(double rate) {
    require_positive(rate, "constant rate");
    return ConstantIntensity{rate};
}

IntensityModel make_piecewise_constant(std::vector<double> breakpoints,
                                       std::vector<double> levels, double tail_level) {
    if (breakpoints.empty() || breakpoints.front() != 0.0) {
        throw std::invalid_argument("piecewise-constant breakpoints must start at 0");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        require_finite(breakpoints[i], "breakpoint");
        if (breakpoints[i] <= breakpoints[i - 1]) {
            throw std::invalid_argument("breakpoints must be strictly increasing");
        }
    }
    if (levels.size() + 1 != breakpoints.size()) {
        throw std::invalid_argument("need exactly one level per breakpoint interval");
    }
    for (const double lv : levels) require_positive(lv, "level");
    require_positive(tail_level, "tail level");
    PiecewiseConstantIntensity pc;
    pc.breakpoints = std::move(breakpoints);
    pc.levels = std::move(levels);
    pc.tail_level = tail_level;
    return pc;
}

IntensityModel make_classical_hawkes(PhiSpec phi, double base, KernelSpec kernel) {
    require_positive(base, "base level");
    const double at_base = phi(base);
    if (!(at_base > 0.0) || !std::isfinite(at_base)) {
        throw std::invalid_argument("phi(base) must be strictly positive; the intensity would "
                                    "not stay in the positive class");
    }
    return ClassicalHawkesIntensity{phi, base, std::move(kernel)};
}

void validate_model(const IntensityModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                make_constant(m.rate);
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                make_piecewise_constant(m.breakpoints, m.levels, m.tail_level);
            } else {
                make_classical_hawkes(m.phi, m.base, m.kernel);
            }
        },
        model);
}

std::string model_name(const IntensityModel& model) {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                return "constant";
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                return "piecewise_constant";
            } else {
                return "classical_hawkes";
            }
        },
        model);
}

double contraction_constant(const ClassicalHawkesIntensity& model) {
    return model.phi.lipschitz() * model.kernel.l1_norm();
}

double intensity_lower_bound(const IntensityModel& model) {
    return std::visit(
        [](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                return m.rate;
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                double lb = m.tail_level;
                for (const double lv : m.levels) lb = std::min(lb, lv);
                return lb;
            } else {
                // Excitation is nonnegative and phi nondecreasing.
                return m.phi(m.base);
            }
        },
        model);
}

// ---------------------------------------------------------------------------
// TimeChange

struct TimeChange::HawkesState {
    bool exponential = false;
    double a = 0.0;
    double b = 1.0;
    // Closed-form integration works when phi is identity/affine: the rate is
    // slope*(base + excitation) + intercept.
    bool affine_like = false;
    double slope = 1.0;
    double intercept = 0.0;
    // excitation at each jump time, excluding the jump itself (exp kernel only)
    std::vector<double> excitation_before;
};

namespace {

const ClassicalHawkesIntensity* as_hawkes(const IntensityModel& m) {
    return std::get_if<ClassicalHawkesIntensity>(&m);
}

} // namespace

TimeChange::TimeChange(IntensityModel model, Configuration path, NumericOptions opts)
    : model_(std::move(model)), path_(std::move(path)), opts_(opts) {
    validate_model(model_);
    if (const auto* hk = as_hawkes(model_)) {
        auto st = std::make_shared<HawkesState>();
        st->exponential = hk->kernel.kind == KernelSpec::Kind::exponential;
        st->a = hk->kernel.amplitude;
        st->b = hk->kernel.decay;
        st->affine_like = hk->phi.is_affine_like() && !opts_.force_generic_quadrature;
        st->slope = hk->phi.kind == PhiSpec::Kind::identity ? 1.0 : hk->phi.slope;
        st->intercept = hk->phi.kind == PhiSpec::Kind::identity ? 0.0 : hk->phi.intercept;
        if (st->exponential) {
            const auto& times = path_.times();
            st->excitation_before.resize(times.size());
            double prev = 0.0;
            for (std::size_t i = 0; i < times.size(); ++i) {
                if (i == 0) {
                    st->excitation_before[i] = 0.0;
                } else {
                    st->excitation_before[i] =
                        (st->excitation_before[i - 1] + st->a) *
                        std::exp(-st->b * (times[i] - prev));
                }
                prev = times[i];
            }
        }
        hawkes_ = std::move(st);
    }

    const auto& times = path_.times();
    jump_prefix_.resize(times.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double from = i == 0 ? 0.0 : times[i - 1];
        acc += segment_integral(i, from, times[i]);
        jump_prefix_[i] = acc;
    }
}

double TimeChange::rate(double t) const {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                return m.rate;
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                return m.rate_at(t);
            } else {
                return hawkes_rate(t);
            }
        },
        model_);
}

double TimeChange::hawkes_rate(double t) const {
    return rate_given(path_.count_before(t), t);
}

double TimeChange::rate_given(std::size_t events, double t) const {
    if (const auto* c = std::get_if<ConstantIntensity>(&model_)) return c->rate;
    if (const auto* pc = std::get_if<PiecewiseConstantIntensity>(&model_)) return pc->rate_at(t);
    const auto& hk = std::get<ClassicalHawkesIntensity>(model_);
    const auto& times = path_.times();
    double excitation = 0.0;
    if (events > 0) {
        if (hawkes_->exponential) {
            excitation = (hawkes_->excitation_before[events - 1] + hawkes_->a) *
                         std::exp(-hawkes_->b * (t - times[events - 1]));
        } else {
            const double window = hk.kernel.support_end();
            for (std::size_t i = events; i-- > 0;) {
                const double lag = t - times[i];
                if (lag > window) break;
                excitation += hk.kernel(lag);
            }
        }
    }
    return hk.phi(hk.base + excitation);
}

// Integral of the rate over (from, to], where `seg` events are active on the
// whole segment (from is the seg-th jump time, or 0).  Evaluating the rate
// with a fixed event count keeps the integrand continuous at the endpoints.
double TimeChange::segment_integral(std::size_t seg, double from, double to) const {
    if (!(to > from)) return 0.0;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                return m.rate * (to - from);
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                return m.integral(to) - m.integral(from);
            } else {
                const auto& times = path_.times();
                if (hawkes_->affine_like) {
                    const double drift = hawkes_->slope * m.base + hawkes_->intercept;
                    double acc = drift * (to - from);
                    if (seg > 0) {
                        if (hawkes_->exponential) {
                            const double s_plus = hawkes_->excitation_before[seg - 1] + hawkes_->a;
                            acc += hawkes_->slope * s_plus *
                                   -std::expm1(-hawkes_->b * (to - from)) / hawkes_->b;
                        } else {
                            const double window = m.kernel.support_end();
                            for (std::size_t i = seg; i-- > 0;) {
                                if (from - times[i] > window) break;
                                acc += hawkes_->slope * (m.kernel.integral(to - times[i]) -
                                                         m.kernel.integral(from - times[i]));
                            }
                        }
                    }
                    return acc;
                }
                // Generic route: adaptive Simpson on the segment with a fixed
                // event count; tabulated kernels add splits at knot offsets.
                double s_plus = 0.0;
                if (hawkes_->exponential && seg > 0) {
                    s_plus = hawkes_->excitation_before[seg - 1] + hawkes_->a;
                }
                const double seg_start = from;
                const auto integrand = [&](double s) -> double {
                    double excitation = 0.0;
                    if (seg > 0) {
                        if (hawkes_->exponential) {
                            excitation = s_plus * std::exp(-hawkes_->b * (s - seg_start));
                        } else {
                            const double window = m.kernel.support_end();
                            for (std::size_t i = seg; i-- > 0;) {
                                const double lag = s - times[i];
                                if (lag > window) break;
                                excitation += m.kernel(lag);
                            }
                        }
                    }
                    return m.phi(m.base + excitation);
                };
                std::vector<double> splits;
                if (m.kernel.kind == KernelSpec::Kind::tabulated && seg > 0) {
                    for (std::size_t i = 0; i < seg; ++i) {
                        for (const double knot : m.kernel.grid_t) {
                            const double p = times[i] + knot;
                            if (p > from && p < to) splits.push_back(p);
                        }
                    }
                    std::sort(splits.begin(), splits.end());
                    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
                }
                return integrate_piecewise(integrand, from, to, splits, opts_);
            }
        },
        model_);
}

double TimeChange::value(double t) const {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("compensator evaluation time must be finite and >= 0");
    }
    if (t == 0.0) return 0.0;
    const std::size_t k = path_.count_before(t);
    const double base = k == 0 ? 0.0 : jump_prefix_[k - 1];
    const double from = k == 0 ? 0.0 : path_.times()[k - 1];
    if (t == from) return base;
    return base + segment_integral(k, from, t);
}

double TimeChange::value_at_jump(std::size_t i) const { return jump_prefix_[i]; }

double TimeChange::rate_lower_bound() const { return intensity_lower_bound(model_); }

double TimeChange::inverse(double s, double bracket_limit) const {
    if (!std::isfinite(s) || s < 0.0) {
        throw std::invalid_argument("compensator inverse argument must be finite and >= 0");
    }
    if (s == 0.0) return 0.0;
    if (const auto* c = std::get_if<ConstantIntensity>(&model_)) {
        return s / c->rate;
    }
    if (const auto* pc = std::get_if<PiecewiseConstantIntensity>(&model_)) {
        return pc->integral_inverse(s);
    }

    const auto& times = path_.times();
    const std::size_t n = times.size();

    double lo, ylo, hi, yhi;
    const auto it = std::lower_bound(jump_prefix_.begin(), jump_prefix_.end(), s);
    const std::size_t k = static_cast<std::size_t>(it - jump_prefix_.begin());
    if (k < n) {
        lo = k == 0 ? 0.0 : times[k - 1];
        ylo = k == 0 ? 0.0 : jump_prefix_[k - 1];
        hi = times[k];
        yhi = jump_prefix_[k];
    } else {
        lo = n == 0 ? 0.0 : times[n - 1];
        ylo = n == 0 ? 0.0 : jump_prefix_[n - 1];
        const double lb = rate_lower_bound();
        if (bracket_limit <= 0.0) {
            // Mathematical cap: the rate never drops below lb, so the solution
            // is at most lo + (s - ylo)/lb; the horizon multiple sits on top.
            bracket_limit = opts_.horizon_multiple * std::max(1.0, lo + (s - ylo) / lb);
        }
        double step = std::max((s - ylo) / std::max(rate(std::nextafter(lo, lo + 1.0)), lb),
                               opts_.root_tol);
        hi = lo + step;
        yhi = value(hi);
        while (yhi < s) {
            if (hi > bracket_limit) {
                throw horizon_error("compensator-inverse bracket exceeded limit " +
                                    std::to_string(bracket_limit) + " while seeking s = " +
                                    std::to_string(s));
            }
            step *= 2.0;
            hi = lo + step;
            yhi = value(hi);
        }
    }

    // Bisection refined by secant, bracket always maintained.
    double t = hi;
    double yt = yhi;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(yt - s) <= opts_.root_tol) return t;
        if (yt > s) {
            hi = t;
            yhi = yt;
        } else {
            lo = t;
            ylo = yt;
        }
        if (hi - lo <= 1e-15 * (std::abs(lo) + 1.0)) return 0.5 * (lo + hi);
        double cand;
        if (iter % 2 == 0 && yhi > ylo) {
            cand = lo + (s - ylo) * (hi - lo) / (yhi - ylo); // secant through bracket
            const double margin = 0.01 * (hi - lo);
            cand = std::clamp(cand, lo + margin, hi - margin);
        } else {
            cand = 0.5 * (lo + hi);
        }
        t = cand;
        yt = value(t);
    }
    return t;
}

double TimeChange::inverse_rate(double s) const { return 1.0 / rate(inverse(s)); }

// ---------------------------------------------------------------------------
// Spec-surface wrappers

double intensity_at(const IntensityModel& model, const Configuration& history, double t) {
    if (!std::isfinite(t) || t <= 0.0) {
        throw std::invalid_argument("intensity evaluation time must be finite and > 0");
    }
    if (!history.empty() && history.times().back() >= t) {
        throw predictability_error(
            "history contains an event at time " + std::to_string(history.times().back()) +
            " >= evaluation time " + std::to_string(t) + "; the intensity is predictable");
    }
    validate_model(model);
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ConstantIntensity>) {
                return m.rate;
            } else if constexpr (std::is_same_v<T, PiecewiseConstantIntensity>) {
                return m.rate_at(t);
            } else {
                double excitation = 0.0;
                const double window = m.kernel.support_end();
                const auto& times = history.times();
                for (std::size_t i = times.size(); i-- > 0;) {
                    const double lag = t - times[i];
                    if (lag > window) break;
                    excitation += m.kernel(lag);
                }
                return m.phi(m.base + excitation);
            }
        },
        model);
}

double compensator(const IntensityModel& model, const Configuration& history, double t,
                   const NumericOptions& opts) {
    return TimeChange(model, history, opts).value(t);
}

double compensator_inverse(const IntensityModel& model, const Configuration& history, double s,
                           const NumericOptions& opts) {
    return TimeChange(model, history, opts).inverse(s);
}

} // namespace ghawkes
