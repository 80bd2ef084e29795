#ifndef GHAWKES_SIMULATION_HPP
#define GHAWKES_SIMULATION_HPP

#include "ghawkes/configuration.hpp"
#include "ghawkes/intensity.hpp"
#include "ghawkes/quadrature.hpp"
#include "ghawkes/rng.hpp"

#include <cstddef>
#include <optional>

namespace ghawkes {

// Budget for one simulated path: exactly one of horizon / n_jumps is set.
struct SimulationBudget {
    std::optional<double> horizon;      // simulate on [0, horizon]
    std::optional<std::size_t> n_jumps; // or stop after this many jumps
    std::size_t max_events = 10'000'000;
    NumericOptions numerics{};

    static SimulationBudget by_horizon(double horizon);
    static SimulationBudget by_jump_count(std::size_t n);
    void validate() const;
};

// Unit Poisson path: cumulative sums of Exp(1) interarrivals.
Configuration sample_unit_poisson(Rng& rng, const SimulationBudget& budget);

// g-Hawkes process by inversion of the time change: jump k solves
// y({T_1(Z),...,T_{k-1}(Z)}, T_k(Z)) = T_k(N) where N is the driving path.
// In horizon mode the path stops once the next jump would land beyond the
// horizon; an aborted root bracket raises explosion_error naming the jump.
Configuration ghawkes_inversion(const IntensityModel& model, const Configuration& driving,
                                const SimulationBudget& budget);

// Same construction with the driving unit Poisson jumps drawn on demand,
// so the driving horizon never has to be guessed.  With the same stream this
// is pathwise identical to ghawkes_inversion over a long-enough driving path.
Configuration ghawkes_inversion_sampled(const IntensityModel& model, Rng& rng,
                                        const SimulationBudget& budget);

// Ogata thinning from a dominating piecewise-constant rate, refreshed after
// every candidate point.  Serves as the independent distributional oracle.
Configuration ghawkes_thinning(const IntensityModel& model, Rng& rng,
                               const SimulationBudget& budget);

// Y = N o y*: jump k of the output lands at y(n, T_k(n)).  With a horizon
// budget the output is truncated to image times <= horizon; with a jump
// budget to the first n_jumps jumps.
Configuration forward_time_change(const IntensityModel& model, const Configuration& n,
                                  const SimulationBudget& budget);

} // namespace ghawkes

#endif // GHAWKES_SIMULATION_HPP
