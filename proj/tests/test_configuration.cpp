#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghawkes/configuration.hpp"
#include "ghawkes/errors.hpp"
#include "ghawkes/rng.hpp"
#include "ghawkes/serialization.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace ghawkes;

TEST_CASE("construction enforces the configuration invariants") {
    CHECK_NOTHROW(Configuration({0.3, 0.7}));
    CHECK_NOTHROW(Configuration({}));
    CHECK_THROWS_AS(Configuration({0.7, 0.3}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration({-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration({1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Configuration({1.0, std::nan("")}), std::invalid_argument);
    // duplicate times get the dedicated simplicity error
    CHECK_THROWS_AS(Configuration({0.5, 0.5}), simplicity_error);
}

TEST_CASE("count matches the closed-interval convention") {
    const Configuration c({0.3, 0.7});
    CHECK(c.count(0.5) == 1);
    CHECK(c.count(0.7) == 2); // right continuity at a jump
    CHECK(Configuration({}).count(10.0) == 0);
    CHECK(c.count(0.0) == 0);
    CHECK_THROWS_AS(c.count(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(c.count(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(c.count(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("count_before is the strict (predictable) count") {
    const Configuration c({0.3, 0.7});
    CHECK(c.count_before(0.3) == 0);
    CHECK(c.count_before(0.7) == 1);
    CHECK(c.count_before(0.71) == 2);
}

TEST_CASE("stopped restricts to (0, a]") {
    const Configuration c({1.0, 2.5});
    CHECK(c.stopped(2.0) == Configuration({1.0}));
    CHECK(c.stopped(0.0) == Configuration({}));
    CHECK(c.stopped(2.5) == Configuration({1.0, 2.5})); // boundary inclusive
    CHECK_THROWS_AS(c.stopped(-0.5), std::invalid_argument);
}

TEST_CASE("diff_count examples") {
    const Configuration a({1.0, 2.0});
    const Configuration b({1.0, 3.0});
    CHECK(diff_count(a, b, 2.5) == 1);
    CHECK(diff_count(a, b, 3.5) == 0);
    CHECK(diff_count(Configuration({}), Configuration({}), 1.0) == 0);
}

TEST_CASE("randomized: stop/count identity, symmetry, unit jumps") {
    Rng rng(20240601, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> times;
        double t = 0.0;
        const int n = static_cast<int>(rng.below(20));
        for (int i = 0; i < n; ++i) {
            t += rng.exponential();
            times.push_back(t);
        }
        const Configuration c(times);
        const double a = 5.0 * rng.uniform();
        const Configuration stopped = c.stopped(a);
        for (int probe = 0; probe < 10; ++probe) {
            const double s = 10.0 * rng.uniform();
            CHECK(stopped.count(s) == c.count(std::min(s, a)));
        }
        // counting path: nondecreasing with unit jumps exactly at the T_n
        std::size_t prev = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::size_t at = c.count(c[i]);
            CHECK(at == prev + 1);
            const double just_before = c[i] * (1.0 - 1e-12);
            CHECK(c.count(just_before) == prev);
            prev = at;
        }
        // diff_count symmetry against an independent configuration
        std::vector<double> other_times;
        double u = 0.0;
        const int m = static_cast<int>(rng.below(20));
        for (int i = 0; i < m; ++i) {
            u += rng.exponential();
            other_times.push_back(u);
        }
        const Configuration d(other_times);
        const double probe = 8.0 * rng.uniform();
        CHECK(diff_count(c, d, probe) == diff_count(d, c, probe));
    }
}

TEST_CASE("CSV and JSON round-trips are exact at full double precision") {
    Rng rng(987, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> times;
        double t = 0.0;
        const int n = static_cast<int>(rng.below(12));
        for (int i = 0; i < n; ++i) {
            // spread over many magnitudes to stress the shortest-repr writer
            t += std::exp(8.0 * (rng.uniform() - 0.5));
            times.push_back(t);
        }
        const Configuration c(times);
        CHECK(config_from_csv_row(config_to_csv_row(c)) == c);
        CHECK(config_from_json(config_to_json(c)) == c);
    }
    // empty row round-trips to the empty configuration
    CHECK(config_from_csv_row("") == Configuration({}));
    CHECK(config_to_csv_row(Configuration({})) == "");
    // a third of a unit is not representable; the row must restore it exactly
    const Configuration c({1.0 / 3.0, 2.0 / 3.0, 1.0 + 1e-15});
    CHECK(config_from_csv_row(config_to_csv_row(c)) == c);
}

TEST_CASE("malformed CSV rows are rejected") {
    CHECK_THROWS_AS(config_from_csv_row("1.0,abc"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_csv_row("2.0,1.0"), std::invalid_argument);
}
