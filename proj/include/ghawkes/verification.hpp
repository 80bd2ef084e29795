#ifndef GHAWKES_VERIFICATION_HPP
#define GHAWKES_VERIFICATION_HPP

#include "ghawkes/configuration.hpp"
#include "ghawkes/functionals.hpp"
#include "ghawkes/intensity.hpp"
#include "ghawkes/quadrature.hpp"
#include "ghawkes/statistics.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ghawkes {

struct VerifyOptions {
    double k_sigma = 3.0; // pass band around exact targets, in standard errors
    double alpha = 0.01;
    std::size_t permutations = 1000;
    double ess_floor = 100.0; // minimum effective sample size for weighted estimates
    unsigned threads = 0;     // 0 = available parallelism
    std::size_t max_events = 10'000'000;
    NumericOptions numerics{};
};

// Seeded Monte Carlo summary.  The verdict is derived deterministically:
// pass iff |estimate - target| <= k_sigma * standard_error for equality-type
// targets (bound- and test-type experiments document their rule in the note).
struct ExperimentReport {
    std::string name;
    double estimate = 0.0;
    double standard_error = 0.0;
    std::size_t replicates = 0;
    double target = 0.0;
    std::string target_note;
    double k_sigma = 3.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double wall_time_seconds = 0.0;
    nlohmann::json details = nlohmann::json::object();
};

nlohmann::json report_to_json(const ExperimentReport& report);

// Rescaled jump times r_k = y(z_{<k}, T_k(z)) of a path with compensator y
// are the jumps of a unit Poisson process; tests the interarrivals r_k -
// r_{k-1} against Exp(1).  Needs at least 10 jumps.
KsResult time_rescaling_gof(const IntensityModel& model, const Configuration& z,
                            double alpha = 0.01, const NumericOptions& numerics = {});

// Exact closed form of int m(ydot* - 1) ds over the image axis for a
// deterministic piecewise-constant rate with unit tail; this is
// H(Y#pi | pi) for such models.
double pc_entropy_image_axis(const PiecewiseConstantIntensity& pc);
// Same quantity through the original-axis identity int (ydot - 1 - log ydot).
double pc_entropy_original_axis(const PiecewiseConstantIntensity& pc);

// Importance-weighted check of the quasi-invariance identity
// E[f(Y^t) Lambda*(t)] = E_pi[f]: samples driving paths, weights by the
// Girsanov density at y*(t), and compares against the closed-form unit-Poisson
// value of E[f].  The model must be deterministic piecewise-constant with unit
// tail (the bounded class); f's window must not exceed t.
ExperimentReport quasi_invariance_test(const IntensityModel& model, double t,
                                       const PathFunctionalSpec& f, std::size_t replicates,
                                       std::uint64_t seed, const VerifyOptions& opts = {});

// Monte Carlo E[-log Lambda] against the closed-form entropy
// int m(ydot* - 1) ds for a deterministic piecewise-constant rate with unit
// tail (the invertible class, where the two sides must agree).
ExperimentReport entropic_criterion_check(const PiecewiseConstantIntensity& model,
                                          std::size_t replicates, std::uint64_t seed,
                                          const VerifyOptions& opts = {});

// Monte Carlo estimate of E[f(N o y*)] - E[int m(ydot* - 1) ds] for one
// deterministic piecewise-constant time change; the report target is the
// closed-form upper bound log E[e^f].
ExperimentReport variational_objective(const PiecewiseConstantIntensity& ydot_param,
                                       const PathFunctionalSpec& f, std::size_t replicates,
                                       std::uint64_t seed, const VerifyOptions& opts = {});

// Maximizes the variational objective over a finite family with common random
// numbers and compares the max against an independently estimated
// log E_pi[e^f]; pass iff max <= bound + k_sigma * (combined SE).
ExperimentReport variational_sweep(const std::vector<PiecewiseConstantIntensity>& family,
                                   const PathFunctionalSpec& f, std::size_t replicates,
                                   std::uint64_t seed, const VerifyOptions& opts = {});

// Family member for a constant-level sweep: level c on [0, image_span / c],
// unit rate after, so the image-time support of the non-unit part is exactly
// [0, image_span] for every level.
std::vector<PiecewiseConstantIntensity> constant_level_family(const std::vector<double>& levels,
                                                              double image_span);

// Distributional equality of the two constructions (inversion vs thinning):
// permutation two-sample KS on horizon counts and on first jump times.
// Requires contraction_constant < 1; refuses otherwise.
ExperimentReport weak_uniqueness_test(const ClassicalHawkesIntensity& model, double horizon,
                                      std::size_t replicates, std::uint64_t seed,
                                      const VerifyOptions& opts = {});

// Two-model variant (inversion arm uses model_a, thinning arm model_b);
// with model_a != model_b this is the power check.
ExperimentReport weak_uniqueness_test(const ClassicalHawkesIntensity& model_a,
                                      const ClassicalHawkesIntensity& model_b, double horizon,
                                      std::size_t replicates, std::uint64_t seed,
                                      const VerifyOptions& opts = {});

} // namespace ghawkes

#endif // GHAWKES_VERIFICATION_HPP
