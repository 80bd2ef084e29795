#include "ghawkes/simulation.hpp"

#include "ghawkes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghawkes {

SimulationBudget SimulationBudget::by_horizon(double horizon) {
    SimulationBudget b;
    b.horizon = horizon;
    b.validate();
    return b;
}

SimulationBudget SimulationBudget::by_jump_count(std::size_t n) {
    SimulationBudget b;
    b.n_jumps = n;
    return b;
}

void SimulationBudget::validate() const {
    if (horizon.has_value() == n_jumps.has_value()) {
        throw std::invalid_argument("budget must set exactly one of horizon / n_jumps");
    }
    if (horizon && (!std::isfinite(*horizon) || *horizon < 0.0)) {
        throw std::invalid_argument("budget horizon must be finite and >= 0");
    }
    if (max_events == 0) {
        throw std::invalid_argument("budget event cap must be positive");
    }
}

Configuration sample_unit_poisson(Rng& rng, const SimulationBudget& budget) {
    budget.validate();
    std::vector<double> times;
    if (budget.n_jumps) {
        if (*budget.n_jumps > budget.max_events) {
            throw budget_exceeded_error("requested " + std::to_string(*budget.n_jumps) +
                                        " jumps exceeds the event cap");
        }
        times.reserve(*budget.n_jumps);
        double t = 0.0;
        for (std::size_t k = 0; k < *budget.n_jumps; ++k) {
            t += rng.exponential();
            times.push_back(t);
        }
    } else {
        double t = 0.0;
        for (;;) {
            t += rng.exponential();
            if (t > *budget.horizon) break;
            if (times.size() >= budget.max_events) {
                throw budget_exceeded_error("unit Poisson path exceeded the event cap of " +
                                            std::to_string(budget.max_events));
            }
            times.push_back(t);
        }
    }
    return Configuration(std::move(times));
}

namespace {

// Shared jump-by-jump inversion loop.  next_driving_time() produces T_k(N);
// returns the solved jumps of Z.
template <typename NextDrivingTime>
std::vector<double> invert_jumps(const IntensityModel& model, const SimulationBudget& budget,
                                 NextDrivingTime&& next_driving_time, std::size_t driving_count) {
    std::vector<double> solved;
    const std::size_t want =
        budget.n_jumps ? std::min(*budget.n_jumps, driving_count) : driving_count;
    for (std::size_t k = 0; k < want; ++k) {
        const double s = next_driving_time(k);
        TimeChange tc(model, Configuration(solved), budget.numerics);
        double bracket_limit = 0.0;
        if (budget.horizon) {
            // If y cannot reach s by the horizon, jump k+1 lands beyond it.
            if (tc.value(*budget.horizon) < s) break;
            bracket_limit = budget.numerics.horizon_multiple * std::max(1.0, *budget.horizon);
        }
        double t;
        try {
            t = tc.inverse(s, bracket_limit);
        } catch (const horizon_error& e) {
            throw explosion_error("inversion aborted at jump " + std::to_string(k + 1) + ": " +
                                      e.what(),
                                  k + 1);
        }
        if (solved.size() >= budget.max_events) {
            throw budget_exceeded_error("inversion output exceeded the event cap");
        }
        solved.push_back(t);
    }
    return solved;
}

} // namespace

Configuration ghawkes_inversion(const IntensityModel& model, const Configuration& driving,
                                const SimulationBudget& budget) {
    budget.validate();
    validate_model(model);
    auto jumps = invert_jumps(
        model, budget, [&](std::size_t k) { return driving[k]; }, driving.size());
    return Configuration(std::move(jumps));
}

Configuration ghawkes_inversion_sampled(const IntensityModel& model, Rng& rng,
                                        const SimulationBudget& budget) {
    budget.validate();
    validate_model(model);
    double s = 0.0;
    const std::size_t driving_cap = budget.n_jumps ? *budget.n_jumps : budget.max_events;
    auto jumps = invert_jumps(
        model, budget,
        [&](std::size_t) {
            s += rng.exponential();
            return s;
        },
        driving_cap);
    return Configuration(std::move(jumps));
}

Configuration ghawkes_thinning(const IntensityModel& model, Rng& rng,
                               const SimulationBudget& budget) {
    budget.validate();
    validate_model(model);

    const auto* hk = std::get_if<ClassicalHawkesIntensity>(&model);
    const auto* pc = std::get_if<PiecewiseConstantIntensity>(&model);
    const auto* cn = std::get_if<ConstantIntensity>(&model);
    const bool exp_kernel = hk && hk->kernel.kind == KernelSpec::Kind::exponential;

    std::vector<double> accepted;
    double excitation = 0.0; // exp-kernel state: sum of a*exp(-b*(t - T_i)) at current t
    double t = 0.0;

    const auto active_count = [&](double now) -> std::size_t {
        const double window = hk->kernel.support_end();
        std::size_t n = 0;
        for (std::size_t i = accepted.size(); i-- > 0;) {
            if (now - accepted[i] > window) break;
            ++n;
        }
        return n;
    };

    const auto dominating_rate = [&](double now) -> double {
        if (cn) return cn->rate;
        if (pc) {
            // Max of the current and all later levels bounds the rate on
            // every interval to the right of `now`.
            double bound = pc->tail_level;
            for (std::size_t j = pc->levels.size(); j-- > 0;) {
                bound = std::max(bound, pc->levels[j]);
                if (pc->breakpoints[j + 1] <= now) break;
            }
            return bound;
        }
        if (exp_kernel) {
            // h decreasing and phi nondecreasing: the current excitation bounds
            // all future excitation until the next accepted event.
            return hk->phi(hk->base + excitation);
        }
        // Tabulated kernel: each event still inside the support window
        // contributes at most max(h), whatever the lag.
        return hk->phi(hk->base + static_cast<double>(active_count(now)) * hk->kernel.max_value());
    };

    const auto rate_at = [&](double now) -> double {
        if (cn) return cn->rate;
        if (pc) return pc->rate_at(now);
        if (exp_kernel) return hk->phi(hk->base + excitation);
        double sum = 0.0;
        const double window = hk->kernel.support_end();
        for (std::size_t i = accepted.size(); i-- > 0;) {
            const double lag = now - accepted[i];
            if (lag > window) break;
            sum += hk->kernel(lag);
        }
        return hk->phi(hk->base + sum);
    };

    const std::size_t target_jumps = budget.n_jumps.value_or(budget.max_events);
    const std::size_t candidate_cap =
        std::max<std::size_t>(budget.max_events, 1u) * 64u;
    std::size_t candidates = 0;

    while (accepted.size() < target_jumps) {
        const double bound = dominating_rate(t);
        const double wait = rng.exponential() / bound;
        const double cand = t + wait;
        if (budget.horizon && cand > *budget.horizon) break;
        if (++candidates > candidate_cap) {
            throw budget_exceeded_error("thinning exceeded the candidate cap of " +
                                        std::to_string(candidate_cap));
        }
        if (exp_kernel) {
            excitation *= std::exp(-hk->kernel.decay * wait);
        }
        t = cand;
        const double lambda = rate_at(t);
        if (rng.uniform() * bound <= lambda) {
            if (accepted.size() >= budget.max_events) {
                throw budget_exceeded_error("thinning output exceeded the event cap");
            }
            accepted.push_back(t);
            if (exp_kernel) excitation += hk->kernel.amplitude;
        }
    }
    return Configuration(std::move(accepted));
}

Configuration forward_time_change(const IntensityModel& model, const Configuration& n,
                                  const SimulationBudget& budget) {
    budget.validate();
    TimeChange tc(model, n, budget.numerics);
    std::vector<double> mapped;
    mapped.reserve(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
        const double image = tc.value_at_jump(k);
        if (budget.horizon && image > *budget.horizon) break;
        if (budget.n_jumps && mapped.size() >= *budget.n_jumps) break;
        mapped.push_back(image);
    }
    return Configuration(std::move(mapped));
}

} // namespace ghawkes
