#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghawkes/errors.hpp"
#include "ghawkes/intensity.hpp"
#include "ghawkes/model_config.hpp"
#include "ghawkes/rng.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <cmath>
#include <fstream>

using namespace ghawkes;
using test_support::config;

namespace {

IntensityModel spec_hawkes() {
    return make_classical_hawkes(PhiSpec::identity(), 1.0, KernelSpec::exponential(0.5, 1.0));
}

} // namespace

TEST_CASE("intensity_at closed-form examples") {
    CHECK(intensity_at(make_constant(2.0), config({}), 5.0) == doctest::Approx(2.0));
    CHECK(intensity_at(spec_hawkes(), config({}), 3.0) == doctest::Approx(1.0));
    // one event at 0.8 seen from t = 2: 1 + 0.5 e^{-1.2}
    CHECK(intensity_at(spec_hawkes(), config({0.8}), 2.0) ==
          doctest::Approx(1.0 + 0.5 * std::exp(-1.2)).epsilon(1e-12));
    CHECK(intensity_at(spec_hawkes(), config({0.8}), 2.0) == doctest::Approx(1.150597).epsilon(1e-6));
}

TEST_CASE("intensity_at enforces predictability") {
    CHECK_THROWS_AS(intensity_at(spec_hawkes(), config({2.0}), 2.0), predictability_error);
    CHECK_THROWS_AS(intensity_at(spec_hawkes(), config({2.5}), 2.0), predictability_error);
    CHECK_THROWS_AS(intensity_at(spec_hawkes(), config({}), -1.0), std::invalid_argument);
}

TEST_CASE("compensator examples against the independent quadrature oracle") {
    CHECK(compensator(make_constant(2.0), config({}), 3.0) == doctest::Approx(6.0));

    const IntensityModel hk = spec_hawkes();
    const Configuration h({0.8});
    const double closed = compensator(hk, h, 2.0);
    CHECK(closed == doctest::Approx(2.0 + 0.5 * (1.0 - std::exp(-1.2))).epsilon(1e-12));
    CHECK(closed == doctest::Approx(2.349403).epsilon(1e-6));
    // oracle: recursive Simpson of the predictable rate, split at the event
    const double oracle = oracles::integrate_split(
        [&](double s) { return 1.0 + (s > 0.8 ? 0.5 * std::exp(-(s - 0.8)) : 0.0); }, 0.0, 2.0,
        {0.8});
    CHECK(std::abs(closed - oracle) <= 1e-10 * std::max(1.0, std::abs(oracle)));

    const IntensityModel pc = make_piecewise_constant({0.0, 2.0}, {2.0}, 1.0);
    CHECK(compensator(pc, config({}), 3.0) == doctest::Approx(5.0));
    CHECK(compensator(pc, config({}), 0.0) == doctest::Approx(0.0));
}

TEST_CASE("compensator_inverse examples against the independent bisection oracle") {
    CHECK(compensator_inverse(make_constant(2.0), config({}), 3.0) == doctest::Approx(1.5));
    CHECK(compensator_inverse(make_constant(7.0), config({}), 0.0) == doctest::Approx(0.0));

    const IntensityModel hk = spec_hawkes();
    const Configuration h({0.8});
    const double solved = compensator_inverse(hk, h, 2.0);
    const double oracle = oracles::bisect_increasing(
        [&](double t) { return t + 0.5 * (1.0 - std::exp(-(t - 0.8))); }, 0.8, 4.0, 2.0, 1e-12);
    CHECK(std::abs(solved - oracle) <= 1e-8);
    CHECK(solved == doctest::Approx(1.7027).epsilon(1e-4));
}

TEST_CASE("contraction_constant examples") {
    const auto hk1 = ClassicalHawkesIntensity{PhiSpec::identity(), 1.0,
                                              KernelSpec::exponential(0.5, 1.0)};
    CHECK(contraction_constant(hk1) == doctest::Approx(0.5));
    const auto hk2 = ClassicalHawkesIntensity{PhiSpec::affine(0.3, 0.5), 1.0,
                                              KernelSpec::exponential(1.0, 2.0)};
    CHECK(contraction_constant(hk2) == doctest::Approx(0.15));
    const auto hk3 = ClassicalHawkesIntensity{PhiSpec::identity(), 1.0,
                                              KernelSpec::exponential(2.0, 1.0)};
    CHECK(contraction_constant(hk3) == doctest::Approx(2.0));
    CHECK(contraction_constant(hk3) >= 1.0); // violates the strong-uniqueness condition
}

TEST_CASE("tabulated kernels: interpolation, L1 norm, compensator") {
    const KernelSpec tab = KernelSpec::tabulated({{0.0, 1.0}, {1.0, 0.5}, {2.0, 0.0}});
    CHECK(tab(0.5) == doctest::Approx(0.75));
    CHECK(tab(3.0) == doctest::Approx(0.0));
    CHECK(tab.l1_norm() == doctest::Approx(0.75 + 0.25));
    CHECK(tab.integral(10.0) == doctest::Approx(tab.l1_norm()));
    CHECK_THROWS_AS(KernelSpec::tabulated({}), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec::tabulated({{0.5, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec::tabulated({{0.0, -1.0}}), std::invalid_argument);

    const IntensityModel model = make_classical_hawkes(PhiSpec::identity(), 1.0, tab);
    const Configuration h({0.5});
    const double lib = compensator(model, h, 2.0);
    const double oracle = oracles::integrate_split(
        [&](double s) {
            double exc = 0.0;
            if (s > 0.5) {
                const double lag = s - 0.5;
                if (lag < 1.0) {
                    exc = 1.0 - 0.5 * lag;
                } else if (lag < 2.0) {
                    exc = 0.5 - 0.5 * (lag - 1.0);
                }
            }
            return 1.0 + exc;
        },
        0.0, 2.0, {0.5, 1.5});
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("model validation rejects non-positive parameters") {
    CHECK_THROWS_AS(make_constant(0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_constant(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise_constant({0.0, 1.0}, {0.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise_constant({0.5, 1.0}, {1.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_piecewise_constant({0.0, 1.0}, {1.0, 2.0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_classical_hawkes(PhiSpec::identity(), 0.0,
                                          KernelSpec::exponential(0.5, 1.0)),
                    std::invalid_argument);
    // affine phi with phi(base) <= 0 would leave the positive class
    CHECK_THROWS_AS(make_classical_hawkes(PhiSpec::affine(0.5, -2.0), 1.0,
                                          KernelSpec::exponential(0.5, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("property: compensator strictly increasing") {
    Rng rng(11, 0);
    for (int trial = 0; trial < 25; ++trial) {
        IntensityModel model;
        switch (trial % 4) {
            case 0: model = make_constant(0.2 + 3.0 * rng.uniform()); break;
            case 1: model = test_support::random_pc_unit_tail(rng); break;
            case 2: model = test_support::random_exp_hawkes(rng); break;
            default: model = test_support::random_sigmoid_hawkes(rng); break;
        }
        const Configuration path = test_support::random_hawkes_path(
            make_constant(1.0), rng, 6.0); // any fixed history works here
        TimeChange tc(model, path, {});
        double prev_t = 0.0;
        double prev_y = 0.0;
        for (int step = 0; step < 8; ++step) {
            const double t = prev_t + 0.1 + rng.uniform();
            const double y = tc.value(t);
            CHECK(y > prev_y);
            prev_t = t;
            prev_y = y;
        }
    }
}

TEST_CASE("property: inverse round trip |y(y*(s)) - s| <= tol") {
    Rng rng(12, 0);
    for (int trial = 0; trial < 25; ++trial) {
        IntensityModel model;
        switch (trial % 4) {
            case 0: model = make_constant(0.2 + 3.0 * rng.uniform()); break;
            case 1: model = test_support::random_pc_unit_tail(rng); break;
            case 2: model = test_support::random_exp_hawkes(rng); break;
            default: model = test_support::random_sigmoid_hawkes(rng); break;
        }
        const Configuration path = test_support::random_hawkes_path(model, rng, 5.0);
        TimeChange tc(model, path, {});
        for (int probe = 0; probe < 6; ++probe) {
            const double s = 12.0 * rng.uniform();
            const double t = tc.inverse(s);
            CHECK(std::abs(tc.value(t) - s) <= 2e-10);
        }
    }
}

TEST_CASE("closed form vs forced generic quadrature agree to 1e-10 relative") {
    Rng rng(13, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const IntensityModel model = test_support::random_exp_hawkes(rng, trial % 2 == 1);
        const Configuration path = test_support::random_hawkes_path(model, rng, 5.0);
        NumericOptions generic;
        generic.force_generic_quadrature = true;
        TimeChange closed(model, path, {});
        TimeChange quad(model, path, generic);
        for (int probe = 0; probe < 5; ++probe) {
            const double t = 6.0 * rng.uniform();
            const double a = closed.value(t);
            const double b = quad.value(t);
            CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("derivative identity ydot*(y(t)) * ydot(t) = 1 via numeric differentiation") {
    Rng rng(14, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const IntensityModel model =
            trial % 2 == 0 ? test_support::random_exp_hawkes(rng) : test_support::random_pc_unit_tail(rng);
        const Configuration path = test_support::random_hawkes_path(model, rng, 5.0);
        TimeChange tc(model, path, {});
        for (int probe = 0; probe < 4; ++probe) {
            // pick t away from jumps and breakpoints so the derivative exists
            const double t = 0.05 + 5.0 * rng.uniform();
            const double s = tc.value(t);
            const double eps = 1e-6;
            if (tc.path().count_before(t - eps) != tc.path().count_before(t + eps)) continue;
            const double dystar = (tc.inverse(s + eps) - tc.inverse(s - eps)) / (2.0 * eps);
            const double rate = tc.rate(t);
            CHECK(dystar * rate == doctest::Approx(1.0).epsilon(1e-6));
            // evaluator's own inverse-rate accessor agrees with 1/rate
            CHECK(tc.inverse_rate(s) * rate == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("quadrature failure carries the achieved tolerance") {
    NumericOptions tight;
    tight.quad_abs_tol = 1e-16;
    tight.quad_max_intervals = 8; // starve the subdivision budget
    const IntensityModel model = make_classical_hawkes(
        PhiSpec::sigmoid(0.7, 1.0, 3.0), 1.0, KernelSpec::exponential(0.8, 1.2));
    const Configuration path({0.3, 0.9, 1.4, 2.2, 3.1});
    try {
        TimeChange tc(model, path, tight);
        (void)tc.value(5.0);
        FAIL("expected numeric_error");
    } catch (const numeric_error& e) {
        CHECK(e.achieved_tolerance() > 1e-16);
    }
}

TEST_CASE("bracket guard raises horizon_error when the multiple is tiny") {
    NumericOptions opts;
    opts.horizon_multiple = 1e-6;
    const IntensityModel model = spec_hawkes();
    TimeChange tc(model, config({0.5}), opts);
    CHECK_THROWS_AS(tc.inverse(50.0), horizon_error);
}

TEST_CASE("model config files parse and report key paths on errors") {
    {
        std::ofstream out("model_ok.json");
        out << R"({"model":{"kind":"classical_hawkes","alpha":1.0,
                   "kernel":{"kind":"exponential","a":0.5,"b":1.0},
                   "phi":{"kind":"identity"}},
                   "tolerances":{"quadrature_abs":1e-10,"root":1e-10}})";
    }
    const ModelConfig cfg = parse_model_file("model_ok.json");
    CHECK(model_name(cfg.model) == "classical_hawkes");
    CHECK(cfg.numerics.root_tol == doctest::Approx(1e-10));

    {
        std::ofstream out("model_bad_key.json");
        out << R"({"model":{"kind":"classical_hawkes","alpha":1.0,
                   "kernel":{"kind":"exponential","a":0.5},
                   "phi":{"kind":"identity"}}})";
    }
    try {
        parse_model_file("model_bad_key.json");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.key_path() == "model.kernel.b");
    }

    {
        std::ofstream out("model_syntax.json");
        out << "{\"model\": {";
    }
    try {
        parse_model_file("model_syntax.json");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}
