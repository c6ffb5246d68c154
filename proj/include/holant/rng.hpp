#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace holant {

/// Seeded generator with portable derived draws. std::uniform_*_distribution
/// is implementation-defined, so draws are built from raw 64-bit output to
/// keep seeded runs identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform point in the open disk of the given radius.
    std::complex<double> in_disk(double radius)
    {
        const double r = radius * std::sqrt(uniform());
        const double t = 2.0 * 3.14159265358979323846 * uniform();
        return std::polar(r, t);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace holant
