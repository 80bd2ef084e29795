#include "ghawkes/statistics.hpp"

#include "ghawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghawkes {

DistributionSpec DistributionSpec::exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw unsupported_model_error("exponential rate must be finite and > 0");
    }
    DistributionSpec d;
    d.kind = Kind::exponential;
    d.rate = rate;
    return d;
}

DistributionSpec DistributionSpec::uniform01() {
    DistributionSpec d;
    d.kind = Kind::uniform01;
    return d;
}

double DistributionSpec::cdf(double x) const {
    switch (kind) {
        case Kind::exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-rate * x);
        case Kind::uniform01:
            return std::clamp(x, 0.0, 1.0);
    }
    return 0.0;
}

std::string DistributionSpec::name() const {
    switch (kind) {
        case Kind::exponential:
            return "exponential(rate=" + std::to_string(rate) + ")";
        case Kind::uniform01:
            return "uniform(0,1)";
    }
    return "";
}

double ks_critical_coefficient(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    return std::sqrt(-0.5 * std::log(alpha / 2.0));
}

KsResult ks_one_sample(std::vector<double> samples, const DistributionSpec& dist, double alpha) {
    if (samples.size() < 10) {
        throw std::invalid_argument("KS test needs at least 10 samples, got " +
                                    std::to_string(samples.size()));
    }
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = dist.cdf(samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    KsResult r;
    r.statistic = d;
    r.n = samples.size();
    r.alpha = alpha;
    r.critical_value = ks_critical_coefficient(alpha) / std::sqrt(n);
    r.reject = d > r.critical_value;
    return r;
}

double two_sample_ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

PermutationResult permutation_two_sample_ks(const std::vector<double>& a,
                                            const std::vector<double>& b,
                                            std::size_t permutations, double alpha, Rng& rng) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("permutation test needs nonempty samples in both arms");
    }
    const double observed = two_sample_ks_statistic(a, b);

    std::vector<double> pool;
    pool.reserve(a.size() + b.size());
    pool.insert(pool.end(), a.begin(), a.end());
    pool.insert(pool.end(), b.begin(), b.end());

    std::size_t at_least = 0;
    std::vector<double> pa(a.size()), pb(b.size());
    for (std::size_t p = 0; p < permutations; ++p) {
        for (std::size_t k = pool.size(); k > 1; --k) {
            const std::size_t j = static_cast<std::size_t>(rng.below(k));
            std::swap(pool[k - 1], pool[j]);
        }
        pa.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(a.size()));
        pb.assign(pool.begin() + static_cast<std::ptrdiff_t>(a.size()), pool.end());
        if (two_sample_ks_statistic(pa, pb) >= observed - 1e-12) ++at_least;
    }

    PermutationResult r;
    r.statistic = observed;
    r.permutations = permutations;
    r.alpha = alpha;
    r.p_value = (1.0 + static_cast<double>(at_least)) / (1.0 + static_cast<double>(permutations));
    r.reject = r.p_value <= alpha;
    return r;
}

SampleStats summarize(const std::vector<double>& xs) {
    SampleStats s;
    s.n = xs.size();
    if (xs.empty()) return s;
    double sum = 0.0;
    for (const double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (const double x : xs) {
            const double d = x - s.mean;
            ss += d * d;
        }
        s.variance = ss / static_cast<double>(xs.size() - 1);
        s.standard_error = std::sqrt(s.variance / static_cast<double>(xs.size()));
    }
    return s;
}

} // namespace ghawkes
