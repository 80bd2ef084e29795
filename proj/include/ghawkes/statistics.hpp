#ifndef GHAWKES_STATISTICS_HPP
#define GHAWKES_STATISTICS_HPP

#include "ghawkes/rng.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ghawkes {

// Reference distribution for one-sample goodness of fit.
struct DistributionSpec {
    enum class Kind { exponential, uniform01 };
    Kind kind = Kind::exponential;
    double rate = 1.0;

    static DistributionSpec exponential(double rate);
    static DistributionSpec uniform01();
    double cdf(double x) const;
    std::string name() const;
};

struct KsResult {
    double statistic = 0.0; // D_n
    std::size_t n = 0;
    double alpha = 0.01;
    double critical_value = 0.0;
    bool reject = false;
};

// Asymptotic coefficient c(alpha) = sqrt(-ln(alpha/2)/2); c(0.01) = 1.628.
double ks_critical_coefficient(double alpha);

// One-sample Kolmogorov-Smirnov against the named CDF; critical value
// c(alpha)/sqrt(n).  Requires n >= 10.
KsResult ks_one_sample(std::vector<double> samples, const DistributionSpec& dist,
                       double alpha = 0.01);

// sup_x |F_a(x) - F_b(x)| over the pooled sample (ties handled).
double two_sample_ks_statistic(std::vector<double> a, std::vector<double> b);

struct PermutationResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t permutations = 0;
    double alpha = 0.01;
    bool reject = false;
};

// Two-sample KS with a permutation-calibrated critical value; valid for
// discrete data (counts) where the continuous critical value is not.
PermutationResult permutation_two_sample_ks(const std::vector<double>& a,
                                            const std::vector<double>& b,
                                            std::size_t permutations, double alpha, Rng& rng);

struct SampleStats {
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double standard_error = 0.0;
    std::size_t n = 0;
};

SampleStats summarize(const std::vector<double>& xs);

} // namespace ghawkes

#endif // GHAWKES_STATISTICS_HPP
