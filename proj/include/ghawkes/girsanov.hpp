#ifndef GHAWKES_GIRSANOV_HPP
#define GHAWKES_GIRSANOV_HPP

#include "ghawkes/configuration.hpp"
#include "ghawkes/intensity.hpp"
#include "ghawkes/quadrature.hpp"

#include <limits>

namespace ghawkes {

// (x+1)log(x+1) - x for x > -1, 1 at x = -1; the Poisson-space counterpart of
// x^2/2.  Smooth, convex, nonnegative.  x < -1 raises std::domain_error.
double m_function(double x);

struct PathFunctionalOptions {
    NumericOptions numerics{};
    // Flag threshold for the integrability diagnostic int |ydot - 1| ds.
    double l1_flag_bound = std::numeric_limits<double>::infinity();
};

// Path-wise record over [0, horizon]: the Girsanov log-density, both sides of
// the entropy identity, and both sides of the p-norm identity.
//
//   log_lambda        = sum_{T_k <= H} log ydot(T_k) + int_0^H (1 - ydot) ds
//   entropy_n_side    = int_0^H (ydot - 1 - log ydot) ds
//   entropy_ystar_side= int_0^{y(H)} m(ydot* - 1) ds, reported via the exact
//                       substitution s = y(u) (integrand m(1/ydot - 1) ydot on
//                       the original axis); the direct image-axis quadrature
//                       is exposed separately as the independent route.
//   pnorm_side_a      = int_0^{y(H)} |1/ydot* - 1|^p ydot* ds, computed on the
//                       image axis through the numeric inverse
//   pnorm_side_b      = int_0^H |ydot - 1|^p ds
struct PathFunctionals {
    double log_lambda = 0.0;
    double entropy_n_side = 0.0;
    double entropy_ystar_side = 0.0;
    double pnorm_side_a = 0.0;
    double pnorm_side_b = 0.0;
    double p = 1.0;
    double horizon = 0.0;
    double l1_deviation = 0.0; // int_0^H |ydot - 1| ds
    bool l1_flagged = false;
};

// log Lambda_y over [0, horizon].  A non-finite log of the intensity raises
// numeric_error carrying the offending jump time.
double log_density(const IntensityModel& model, const Configuration& path, double horizon,
                   const NumericOptions& opts = {});

PathFunctionals path_functionals(const IntensityModel& model, const Configuration& path,
                                 double horizon, double p,
                                 const PathFunctionalOptions& opts = {});

// int_0^{y(horizon)} m(ydot*(s) - 1) ds integrated directly on the image axis
// through the numeric inverse; cross-check route for entropy_ystar_side.
double entropy_image_axis_direct(const IntensityModel& model, const Configuration& path,
                                 double horizon, const NumericOptions& opts = {});

} // namespace ghawkes

#endif // GHAWKES_GIRSANOV_HPP
