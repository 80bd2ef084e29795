#ifndef GHAWKES_FUNCTIONALS_HPP
#define GHAWKES_FUNCTIONALS_HPP

#include "ghawkes/configuration.hpp"

#include <string>

namespace ghawkes {

// Built-in library of path functionals f used by the statistical checks.
// Every member has closed-form E_pi[f] and log E_pi[e^f] under the unit
// Poisson law, so weighted estimates can be compared against exact targets.
//
//   constant          f = v
//   count_at          f = N(t)
//   void_indicator    f = 1{N(t) = 0}
//   count_log_rate    f = N(t) log(c) - (c - 1) t   (the rate-c Girsanov
//                       log-density on [0, t]; e^f integrates to exactly 1)
struct PathFunctionalSpec {
    enum class Kind { constant, count_at, void_indicator, count_log_rate };

    Kind kind = Kind::constant;
    double value = 0.0; // constant
    double t = 0.0;     // observation window for the other kinds
    double rate = 1.0;  // count_log_rate

    static PathFunctionalSpec constant(double v);
    static PathFunctionalSpec count_at(double t);
    static PathFunctionalSpec void_indicator(double t);
    static PathFunctionalSpec count_log_rate(double rate, double t);

    // Spec string: "const:v" | "count:t" | "void:t" | "loglin:c:t".
    static PathFunctionalSpec parse(const std::string& spec);

    double evaluate(const Configuration& omega) const;
    // E_pi[f] under the unit Poisson law.
    double poisson_expectation() const;
    // log E_pi[e^f] under the unit Poisson law.
    double log_mgf() const;
    // Largest time the functional looks at (0 for constants).
    double window() const;
    std::string describe() const;
};

} // namespace ghawkes

#endif // GHAWKES_FUNCTIONALS_HPP
