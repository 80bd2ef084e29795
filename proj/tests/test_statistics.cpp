#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghawkes/rng.hpp"
#include "ghawkes/statistics.hpp"

#include <cmath>
#include <vector>

using namespace ghawkes;

TEST_CASE("critical coefficient reproduces the pinned value") {
    CHECK(ks_critical_coefficient(0.01) == doctest::Approx(1.628).epsilon(5e-4));
    CHECK(ks_critical_coefficient(0.05) == doctest::Approx(1.358).epsilon(5e-4));
    CHECK_THROWS_AS(ks_critical_coefficient(0.0), std::invalid_argument);
}

TEST_CASE("exact exponential quantiles are a near-perfect fit") {
    const std::size_t n = 500;
    std::vector<double> samples;
    for (std::size_t i = 1; i <= n; ++i) {
        const double u = static_cast<double>(i) / (n + 1.0);
        samples.push_back(-std::log(1.0 - u));
    }
    const KsResult r = ks_one_sample(std::move(samples), DistributionSpec::exponential(1.0));
    CHECK(r.statistic <= 1.0 / (n + 1.0) + 1e-12);
    CHECK_FALSE(r.reject);
}

TEST_CASE("degenerate all-zero sample against Exp(1) is rejected with D = 1") {
    std::vector<double> zeros(50, 0.0);
    const KsResult r = ks_one_sample(std::move(zeros), DistributionSpec::exponential(1.0));
    CHECK(r.statistic == doctest::Approx(1.0));
    CHECK(r.reject);
}

TEST_CASE("ks_one_sample requires at least 10 samples") {
    std::vector<double> few(5, 1.0);
    CHECK_THROWS_AS(ks_one_sample(std::move(few), DistributionSpec::exponential(1.0)),
                    std::invalid_argument);
}

TEST_CASE("uniform reference distribution") {
    Rng rng(7, 0);
    std::vector<double> u;
    for (int i = 0; i < 2000; ++i) u.push_back(rng.uniform());
    const KsResult r = ks_one_sample(std::move(u), DistributionSpec::uniform01());
    CHECK_FALSE(r.reject);
}

TEST_CASE("null calibration: rejection rate about alpha over 200 seeded trials") {
    // 200 trials of 5000 Exp(1) draws tested against Exp(1) at alpha = 0.01
    int rejections = 0;
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        Rng rng(500, trial);
        std::vector<double> xs(5000);
        for (auto& x : xs) x = rng.exponential();
        if (ks_one_sample(std::move(xs), DistributionSpec::exponential(1.0), 0.01).reject) {
            ++rejections;
        }
    }
    const double rate = rejections / 200.0;
    CHECK(rate <= 0.03); // 0.01 +/- 0.02
}

TEST_CASE("two-sample statistic handles ties") {
    CHECK(two_sample_ks_statistic({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == doctest::Approx(0.0));
    CHECK(two_sample_ks_statistic({1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}) == doctest::Approx(1.0));
    CHECK(two_sample_ks_statistic({1.0, 2.0}, {1.0, 2.0, 2.0}) ==
          doctest::Approx(1.0 / 2.0 - 1.0 / 3.0));
}

TEST_CASE("permutation test: level under the null, power under a shift") {
    Rng gen(801, 0);
    std::vector<double> a(400), b(400);
    for (auto& x : a) x = gen.exponential();
    for (auto& x : b) x = gen.exponential();
    Rng perm(802, 0);
    const PermutationResult null_res = permutation_two_sample_ks(a, b, 500, 0.01, perm);
    CHECK_FALSE(null_res.reject);

    for (auto& x : b) x += 0.8; // strong location shift
    Rng perm2(803, 0);
    const PermutationResult shifted = permutation_two_sample_ks(a, b, 500, 0.01, perm2);
    CHECK(shifted.reject);
    CHECK(shifted.p_value <= 0.01);
}

TEST_CASE("permutation calibration on discrete counts") {
    // both arms Poisson(4) counts: rejection rate over seeded trials near alpha
    int rejections = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        Rng gen(900 + t, 0);
        std::vector<double> a(150), b(150);
        const auto draw_poisson = [&](double mean) {
            // inversion by summing exponentials; fine at these sizes
            int k = 0;
            double s = gen.exponential();
            while (s <= mean) {
                ++k;
                s += gen.exponential();
            }
            return static_cast<double>(k);
        };
        for (auto& x : a) x = draw_poisson(4.0);
        for (auto& x : b) x = draw_poisson(4.0);
        Rng perm(1000 + t, 0);
        if (permutation_two_sample_ks(a, b, 300, 0.05, perm).reject) ++rejections;
    }
    const double rate = static_cast<double>(rejections) / trials;
    CHECK(rate <= 0.12); // alpha = 0.05 with permutation calibration
}

TEST_CASE("summarize basic moments") {
    const SampleStats s = summarize({1.0, 2.0, 3.0, 4.0});
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.variance == doctest::Approx(5.0 / 3.0));
    CHECK(s.standard_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(summarize({}).n == 0);
}

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a(123, 5);
    Rng b(123, 5);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(123, 6);
    int same = 0;
    Rng a2(123, 5);
    for (int i = 0; i < 100; ++i) {
        if (a2.next_u64() == c.next_u64()) ++same;
    }
    CHECK(same == 0);
}

TEST_CASE("rng uniforms stay inside the open interval") {
    Rng rng(3, 3);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}
