#ifndef GHAWKES_TESTS_ORACLES_HPP
#define GHAWKES_TESTS_ORACLES_HPP

// Independent numeric oracles for the test suites.  These deliberately do not
// reuse the library's quadrature or root-finding code paths: recursive
// Simpson here vs. the iterative implementation in the library, and plain
// bisection vs. the secant-refined solver.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Recursive adaptive Simpson.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fb, double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_rec(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           simpson_rec(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    if (!(b > a)) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fb, fm, whole, tol, 48);
}

// Integrate with forced splits (for integrands with jumps at event times).
inline double integrate_split(const std::function<double(double)>& f, double a, double b,
                              std::vector<double> splits, double tol = 1e-12) {
    double total = 0.0;
    double lo = a;
    splits.push_back(b);
    for (const double hi : splits) {
        if (hi <= lo || hi > b) continue;
        total += integrate(f, lo, hi, tol);
        lo = hi;
    }
    if (lo < b) total += integrate(f, lo, b, tol);
    return total;
}

// Plain bisection for an increasing g; returns t with |g(t) - target| driven
// by interval width below tol_t.
inline double bisect_increasing(const std::function<double(double)>& g, double lo, double hi,
                                double target, double tol_t = 1e-12) {
    for (int i = 0; i < 200 && hi - lo > tol_t; ++i) {
        const double m = 0.5 * (lo + hi);
        if (g(m) < target) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

// Mean intensity of a linear Hawkes process with rate alpha + int h(t-s)dN(s):
// solves the renewal equation m(t) = alpha + int_0^t h(t-u) m(u) du on a grid
// by trapezoidal stepping.  Returns m at the final grid point.
inline double renewal_equation_mean_rate(double alpha, const std::function<double(double)>& h,
                                         double t_end, double dt) {
    const std::size_t n = static_cast<std::size_t>(t_end / dt);
    std::vector<double> m(n + 1, 0.0);
    std::vector<double> hv(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) hv[i] = h(static_cast<double>(i) * dt);
    m[0] = alpha;
    for (std::size_t i = 1; i <= n; ++i) {
        // trapezoid over the convolution, solving implicitly for m[i]
        double conv = 0.5 * hv[i] * m[0];
        for (std::size_t j = 1; j < i; ++j) conv += hv[i - j] * m[j];
        conv *= dt;
        // remaining implicit term: 0.5*dt*h(0)*m[i]
        m[i] = (alpha + conv) / (1.0 - 0.5 * dt * hv[0]);
    }
    return m[n];
}

} // namespace oracles

#endif // GHAWKES_TESTS_ORACLES_HPP
