#include "fracns/random_fields.hpp"

#include "fracns/operators.hpp"
#include "fracns/transform.hpp"

namespace fracns {
namespace {

// Stable per-mode stream: the coefficient of a mode depends only on (seed,
// canonical wavevector), so Hermitian pairs can be mirrored exactly.
std::uint64_t mode_key(std::uint64_t seed, const std::array<int, 3>& k) {
    std::uint64_t h = seed;
    for (int a = 0; a < 3; ++a) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k[a])) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
    }
    return h;
}

bool canonical(const std::array<int, 3>& k) {
    for (int a = 0; a < 3; ++a) {
        if (k[a] > 0) return true;
        if (k[a] < 0) return false;
    }
    return true;  // zero mode (unused)
}

}  // namespace

VectorField random_band_limited_field(const SpaceGrid& grid, int kmax, std::uint64_t seed,
                                      bool divergence_free, double amplitude, double spectral_decay) {
    if (2 * kmax >= grid.n) throw std::invalid_argument("random_band_limited_field: kmax too large for grid");
    SpectralField spec(grid, grid.d);
    for (Eigen::Index idx = 0; idx < grid.size(); ++idx) {
        auto j = grid.unflatten(idx);
        std::array<int, 3> k{0, 0, 0};
        bool in_band = false, nonzero = false;
        for (int a = 0; a < grid.d; ++a) {
            k[a] = grid.wavenumber(j[a]);
            if (k[a] != 0) nonzero = true;
        }
        in_band = nonzero;
        for (int a = 0; a < grid.d; ++a)
            if (std::abs(k[a]) > kmax) in_band = false;
        if (!in_band) continue;

        std::array<int, 3> kc = k;
        bool flip = !canonical(k);
        if (flip)
            for (int a = 0; a < 3; ++a) kc[a] = -kc[a];
        Rng rng(mode_key(seed, kc));
        double knorm = 0.0;
        for (int a = 0; a < grid.d; ++a) knorm += static_cast<double>(k[a]) * k[a];
        const double decay = std::pow(knorm, -0.5 * spectral_decay);
        for (int c = 0; c < grid.d; ++c) {
            const std::complex<double> z(rng.normal(), rng.normal());
            spec.comp[c][idx] = decay * (flip ? std::conj(z) : z);
        }
    }
    if (divergence_free) spec = leray_project(spec);
    VectorField out = inverse_transform(spec);
    const double scale = out.max_abs();
    if (scale > 0.0)
        for (int c = 0; c < grid.d; ++c) out.comp[c] *= amplitude / scale;
    return out;
}

}  // namespace fracns
