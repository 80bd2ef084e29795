#ifndef GHAWKES_INTENSITY_HPP
#define GHAWKES_INTENSITY_HPP

#include "ghawkes/configuration.hpp"
#include "ghawkes/quadrature.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ghawkes {

// Link function phi applied to the excitation sum: x -> rate.  Every variant
// is nondecreasing and strictly positive on the reachable arguments
// (x >= base level), and carries its exact Lipschitz constant.
struct PhiSpec {
    enum class Kind { identity, affine, clipped_linear, sigmoid };

    Kind kind = Kind::identity;
    double slope = 1.0;     // affine, clipped_linear
    double intercept = 0.0; // affine
    double floor = 0.0;     // clipped_linear: phi(x) = max(slope*x, floor)
    double scale = 1.0;     // sigmoid
    double midpoint = 0.0;  // sigmoid
    double max_value = 1.0; // sigmoid: phi(x) = max_value / (1 + exp(-(x-midpoint)/scale))

    static PhiSpec identity();
    static PhiSpec affine(double slope, double intercept);
    static PhiSpec clipped_linear(double slope, double floor);
    static PhiSpec sigmoid(double scale, double midpoint, double max_value);

    double operator()(double x) const;
    double lipschitz() const;
    bool is_affine_like() const { return kind == Kind::identity || kind == Kind::affine; }
    std::string name() const;
};

// Excitation kernel h >= 0 with finite L1 norm.  Exponential: h(t) = a*exp(-b t).
// Tabulated: piecewise linear through the grid, zero beyond the last knot
// (compact support); the grid must start at t = 0.
struct KernelSpec {
    enum class Kind { exponential, tabulated };

    Kind kind = Kind::exponential;
    double amplitude = 0.0; // a >= 0
    double decay = 1.0;     // b > 0
    std::vector<double> grid_t;
    std::vector<double> grid_h;

    static KernelSpec exponential(double a, double b);
    static KernelSpec tabulated(std::vector<std::pair<double, double>> points);

    double operator()(double t) const; // h(t); 0 for t < 0
    double integral(double t) const;   // H(t) = int_0^t h, exact for both kinds
    double l1_norm() const;            // a/b analytic, trapezoid sum for tabulated
    double max_value() const;          // sup h
    // Beyond this lag the kernel contributes nothing (infinity for exponential).
    double support_end() const;
    std::string name() const;
};

struct ConstantIntensity {
    double rate = 1.0; // > 0
};

// Deterministic piecewise-constant rate: breakpoints 0 = t_0 < ... < t_k,
// level j on (t_j, t_{j+1}], tail level after t_k.  All levels > 0.
struct PiecewiseConstantIntensity {
    std::vector<double> breakpoints;
    std::vector<double> levels; // size = breakpoints.size() - 1
    double tail_level = 1.0;

    double rate_at(double t) const;
    double integral(double t) const; // int_0^t of the rate, exact
    // Inverse of the integral, exact.
    double integral_inverse(double s) const;
    double last_breakpoint() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
};

// Classical (possibly nonlinear) Hawkes rate phi(base + sum h(t - T_i)) over
// the events strictly before t.
struct ClassicalHawkesIntensity {
    PhiSpec phi;
    double base = 1.0; // alpha > 0
    KernelSpec kernel;
};

using IntensityModel =
    std::variant<ConstantIntensity, PiecewiseConstantIntensity, ClassicalHawkesIntensity>;

// Validated constructors; all throw std::invalid_argument on bad parameters.
IntensityModel make_constant(double rate);
IntensityModel make_piecewise_constant(std::vector<double> breakpoints, std::vector<double> levels,
                                       double tail_level);
IntensityModel make_classical_hawkes(PhiSpec phi, double base, KernelSpec kernel);
void validate_model(const IntensityModel& model);

std::string model_name(const IntensityModel& model);

// Lip(phi) * ||h||_1; the caller may require < 1 for the strong-uniqueness regime.
double contraction_constant(const ClassicalHawkesIntensity& model);

// Infimum of the rate over all histories and times (phi(base) for Hawkes
// models since the excitation sum is nonnegative and phi nondecreasing).
double intensity_lower_bound(const IntensityModel& model);

// Numeric evaluator for the time-change pair (y, y*) of one model along one
// fixed path.  y(t) = int_0^t ydot(path, s) ds with the predictable rate
// (events strictly before s); y is continuous, strictly increasing, y(0) = 0,
// and y(y*(s)) = s within the root tolerance.  Exponential-kernel models with
// identity/affine phi and both deterministic variants use closed forms; the
// rest integrates by adaptive Simpson split at event times (and kernel knots).
class TimeChange {
  public:
    TimeChange(IntensityModel model, Configuration path, NumericOptions opts = {});

    // ydot(path, t): uses events of the path strictly before t.
    double rate(double t) const;
    // Rate with the event count pinned to the first `events` jumps; continuous
    // on the closed segment [T_events, T_{events+1}], which keeps quadrature
    // integrands free of endpoint discontinuities.
    double rate_given(std::size_t events, double t) const;
    // y(path, t).
    double value(double t) const;
    // y*(path, s) = inf{t : y(t) > s}; root-solved so that |y(t) - s| <= root_tol.
    // bracket_limit, when finite, aborts bracket growth with horizon_error.
    double inverse(double s, double bracket_limit = 0.0) const;
    // ydot*(s) = 1 / ydot(y*(s)).
    double inverse_rate(double s) const;

    // y evaluated at jump i of the path (prefix values, computed once).
    double value_at_jump(std::size_t i) const;

    double rate_lower_bound() const;
    const Configuration& path() const noexcept { return path_; }
    const IntensityModel& model() const noexcept { return model_; }
    const NumericOptions& options() const noexcept { return opts_; }

  private:
    struct HawkesState; // per-jump excitation prefix for Hawkes models

    double hawkes_rate(double t) const;
    double hawkes_value(double t) const;
    double segment_integral(std::size_t seg_index, double from, double to) const;

    IntensityModel model_;
    Configuration path_;
    NumericOptions opts_;
    std::shared_ptr<const HawkesState> hawkes_; // set iff model is ClassicalHawkes
    std::vector<double> jump_prefix_;           // y(T_i) for each jump of the path
};

// Spec-surface wrappers.

// ydot(history, t); the history must contain only events strictly before t
// (predictability), otherwise predictability_error.
double intensity_at(const IntensityModel& model, const Configuration& history, double t);

// y(history, t) = int_0^t ydot ds; strictly increasing and continuous in t.
double compensator(const IntensityModel& model, const Configuration& history, double t,
                   const NumericOptions& opts = {});

// y*(history, s): |y(result) - s| <= opts.root_tol.
double compensator_inverse(const IntensityModel& model, const Configuration& history, double s,
                           const NumericOptions& opts = {});

} // namespace ghawkes

#endif // GHAWKES_INTENSITY_HPP
