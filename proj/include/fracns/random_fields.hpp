#pragma once

#include <cstdint>

#include "fracns/field.hpp"

namespace fracns {

/// splitmix64-based generator: identical streams on every platform, unlike
/// the standard-library distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in (0,1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
    /// Standard normal via Box-Muller.
    double normal() {
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::uint64_t state_;
};

/// Random band-limited real field: coefficients ~ decay(|k|) * complex
/// normal for 1 <= |k|_inf <= kmax, Hermitian by construction, optionally
/// Leray-projected to divergence-free. Deterministic for a given seed.
VectorField random_band_limited_field(const SpaceGrid& grid, int kmax, std::uint64_t seed,
                                      bool divergence_free, double amplitude = 1.0,
                                      double spectral_decay = 1.0);

}  // namespace fracns
