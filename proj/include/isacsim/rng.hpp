#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "isacsim/errors.hpp"
#include "isacsim/units.hpp"

namespace isacsim {

// Deterministic keyed random streams built on the splitmix64 mixer
// (Steele/Lea/Flood; the SplittableRandom finalizer, passes BigCrush).
// A stream is keyed by (seed, id words...), so replications, vehicles and
// transitions each get an independent substream that does not depend on
// scheduling or worker count.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kStreamSalt)) {}

    static RngStream keyed(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
        std::uint64_t h = mix(seed ^ kStreamSalt);
        for (std::uint64_t id : ids) h = mix(h ^ mix(id + kGolden));
        RngStream s(0);
        s.state_ = h;
        return s;
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix_final(state_);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    /// Uniform angle in [0, 2*pi).
    double angle() { return 2.0 * kPi * next_double(); }

    /// Exponential with the given mean (mean 0 degenerates to 0).
    double exponential(double mean) {
        if (mean < 0.0) throw NumericError("exponential mean must be >= 0");
        if (mean == 0.0) return 0.0;
        return -mean * std::log1p(-next_double());
    }

    /// Rayleigh with scale sigma (mean sigma*sqrt(pi/2)).
    double rayleigh(double sigma) {
        if (!(sigma > 0.0)) throw NumericError("rayleigh scale must be > 0");
        return sigma * std::sqrt(-2.0 * std::log1p(-next_double()));
    }

    /// Exact Poisson draw by counting unit-exponential arrivals. O(mean),
    /// fine for the point-pattern counts this project needs.
    std::uint64_t poisson(double mean) {
        if (!(mean >= 0.0)) throw NumericError("poisson mean must be >= 0");
        if (mean == 0.0) return 0;
        if (mean > 5e6) throw NumericError("poisson mean too large for the arrival-count sampler");
        std::uint64_t k = 0;
        double acc = exponential(1.0);
        while (acc <= mean) {
            ++k;
            acc += exponential(1.0);
        }
        return k;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kStreamSalt = 0x8AC7230489E80000ULL;

    static std::uint64_t mix_final(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t mix(std::uint64_t z) { return mix_final(z + kGolden); }

    std::uint64_t state_;
};

// Substream id tags, kept in one place so keying stays collision-free.
namespace stream_tag {
inline constexpr std::uint64_t kBsPattern = 1;
inline constexpr std::uint64_t kDrvPattern = 2;
inline constexpr std::uint64_t kDrvMotion = 3;
inline constexpr std::uint64_t kResample = 4;
} // namespace stream_tag

} // namespace isacsim
