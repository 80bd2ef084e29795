#ifndef GHAWKES_RNG_HPP
#define GHAWKES_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ghawkes {

// Splittable stream generator in the splitmix64 family.  A stream is keyed by
// (seed, stream id); replicate r of a Monte Carlo run always owns stream id r,
// so results do not depend on thread scheduling.  Identical (seed, stream)
// reproduce identical output bit for bit.
//
// Uniform and exponential draws are generated here rather than through
// std:: distributions, whose sequences are implementation-defined.
class Rng {
  public:
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed) ^ mix(0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform on (0, 1), endpoints excluded: -log(uniform()) is finite and
    // strictly positive, so exponential interarrivals never tie.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform_co() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double exponential() { return -std::log(uniform()); }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    // Uniform integer in [0, n); n must be positive.  Uses rejection to avoid
    // modulo bias so shuffles are exactly reproducible.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

// Derives a sub-seed for a named purpose (an experiment arm, an auxiliary
// estimate) so different uses of the same user seed never share streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return Rng::mix(seed ^ Rng::mix(salt * 0xD1B54A32D192ED03ULL + 1));
}

} // namespace ghawkes

#endif // GHAWKES_RNG_HPP
