#ifndef GHAWKES_CONFIGURATION_HPP
#define GHAWKES_CONFIGURATION_HPP

#include <cstddef>
#include <vector>

namespace ghawkes {

// A finite simple configuration on (0, inf): strictly increasing, positive,
// finite jump times.  Doubles as the counting path N(t) = #{n : T_n <= t}.
// Immutable after construction; safe to share across threads.
class Configuration {
  public:
    Configuration() = default;

    // Validates: entries finite, > 0, strictly increasing.  Duplicate times
    // violate simplicity and raise simplicity_error; other violations raise
    // std::invalid_argument.
    explicit Configuration(std::vector<double> jump_times);

    std::size_t size() const noexcept { return times_.size(); }
    bool empty() const noexcept { return times_.empty(); }
    const std::vector<double>& times() const noexcept { return times_; }

    // T_{i+1} (0-based access to the ordered jump times).
    double operator[](std::size_t i) const { return times_[i]; }

    // N(t) = #{n : T_n <= t}; right-continuous in t.  t must be >= 0 and finite.
    std::size_t count(double t) const;

    // #{n : T_n < t}: the predictable view used by intensity evaluation.
    std::size_t count_before(double t) const;

    // Restriction to (0, a]: counting path of the process stopped at a.
    Configuration stopped(double a) const;

    bool operator==(const Configuration& other) const noexcept { return times_ == other.times_; }

  private:
    std::vector<double> times_;
};

// |N_omega(t) - N_eta(t)|; symmetric in its configuration arguments.
std::size_t diff_count(const Configuration& omega, const Configuration& eta, double t);

} // namespace ghawkes

#endif // GHAWKES_CONFIGURATION_HPP
