#ifndef GHAWKES_QUADRATURE_HPP
#define GHAWKES_QUADRATURE_HPP

#include "ghawkes/errors.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ghawkes {

// Numeric knobs shared by compensator evaluation, root finding and the
// path functionals.  Defaults follow the project-wide conventions:
// adaptive Simpson at absolute tolerance 1e-10 with a 2^20 interval cap,
// root tolerance 1e-10 measured in the compensator (s) domain.
struct NumericOptions {
    double quad_abs_tol = 1e-10;
    std::size_t quad_max_intervals = std::size_t{1} << 20;
    double root_tol = 1e-10;
    double horizon_multiple = 64.0;
    // Force the generic quadrature path even where a closed form exists;
    // used by tests that compare the two routes.
    bool force_generic_quadrature = false;
};

// Adaptive Simpson on [a, b] with absolute tolerance.  Throws numeric_error
// carrying the achieved tolerance estimate if the interval budget runs out
// before the local error estimates fall below tol.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol,
                          std::size_t max_intervals = std::size_t{1} << 20) {
    if (!(b > a)) return 0.0;

    struct Segment {
        double a, fa, b, fb, m, fm, estimate, tol;
    };

    const auto simpson = [](double left, double fl, double right, double fr, double fmid) {
        return (right - left) / 6.0 * (fl + 4.0 * fmid + fr);
    };

    const double fa = f(a);
    const double fb = f(b);
    const double m0 = 0.5 * (a + b);
    const double fm0 = f(m0);

    std::vector<Segment> stack;
    stack.push_back({a, fa, b, fb, m0, fm0, simpson(a, fa, b, fb, fm0), abs_tol});

    double total = 0.0;
    double residual = 0.0; // error estimate of segments accepted at the cap
    std::size_t used = 1;

    while (!stack.empty()) {
        const Segment seg = stack.back();
        stack.pop_back();

        const double lm = 0.5 * (seg.a + seg.m);
        const double rm = 0.5 * (seg.m + seg.b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = simpson(seg.a, seg.fa, seg.m, seg.fm, flm);
        const double right = simpson(seg.m, seg.fm, seg.b, seg.fb, frm);
        const double err = (left + right - seg.estimate) / 15.0;

        const double width = seg.b - seg.a;
        const bool converged = std::abs(err) <= seg.tol || width <= 1e-14 * (std::abs(seg.a) + 1.0);
        if (converged) {
            total += left + right + err;
            continue;
        }
        if (used + 2 > max_intervals) {
            // Budget exhausted: keep the refined estimate, remember the error.
            total += left + right + err;
            residual += std::abs(err);
            continue;
        }
        used += 2;
        stack.push_back({seg.a, seg.fa, seg.m, seg.fm, lm, flm, left, 0.5 * seg.tol});
        stack.push_back({seg.m, seg.fm, seg.b, seg.fb, rm, frm, right, 0.5 * seg.tol});
    }

    if (residual > abs_tol) {
        throw numeric_error("adaptive quadrature did not converge: achieved " +
                                std::to_string(residual) + ", requested " + std::to_string(abs_tol),
                            residual);
    }
    return total;
}

// Integrates f over [a, b] split at the given interior points (ascending,
// possibly outside [a, b]; out-of-range points are ignored).  Each piece gets
// the full absolute tolerance: callers pick tolerances so that per-piece
// accumulation stays well under the target of the surrounding computation.
template <typename F>
double integrate_piecewise(F&& f, double a, double b, const std::vector<double>& splits,
                           const NumericOptions& opts) {
    if (!(b > a)) return 0.0;
    double total = 0.0;
    double lo = a;
    for (const double s : splits) {
        if (s <= lo) continue;
        if (s >= b) break;
        total += integrate_adaptive(f, lo, s, opts.quad_abs_tol, opts.quad_max_intervals);
        lo = s;
    }
    total += integrate_adaptive(f, lo, b, opts.quad_abs_tol, opts.quad_max_intervals);
    return total;
}

} // namespace ghawkes

#endif // GHAWKES_QUADRATURE_HPP
