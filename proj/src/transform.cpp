#include "fracns/transform.hpp"

#include <unsupported/Eigen/FFT>

#include <stdexcept>

namespace fracns {
namespace {

// In-place 1D transforms along one axis of the flattened n^d array.
// dir = +1: unnormalized forward DFT; dir = -1: unnormalized inverse DFT.
void transform_axis(Eigen::ArrayXcd& data, const SpaceGrid& g, int axis, int dir) {
    const int n = g.n;
    Eigen::Index stride = 1;
    for (int a = g.d - 1; a > axis; --a) stride *= n;
    const Eigen::Index block = stride * n;
    const Eigen::Index nblocks = data.size() / block;

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> in(n), out(n);
    for (Eigen::Index b = 0; b < nblocks; ++b) {
        for (Eigen::Index s = 0; s < stride; ++s) {
            const Eigen::Index base = b * block + s;
            for (int j = 0; j < n; ++j) in[j] = data[base + j * stride];
            if (dir > 0) {
                fft.fwd(out, in);
            } else {
                for (auto& z : in) z = std::conj(z);
                fft.fwd(out, in);
                for (auto& z : out) z = std::conj(z);
            }
            for (int j = 0; j < n; ++j) data[base + j * stride] = out[j];
        }
    }
}

// (-1)^{k1+...+kd} phase from the box being centred at the origin.
void apply_center_phase(Eigen::ArrayXcd& data, const SpaceGrid& g) {
    const Eigen::Index sz = data.size();
    for (Eigen::Index idx = 0; idx < sz; ++idx) {
        auto j = g.unflatten(idx);
        int parity = 0;
        for (int a = 0; a < g.d; ++a) parity ^= (j[a] & 1);
        if (parity) data[idx] = -data[idx];
    }
}

}  // namespace

SpectralField forward_transform(const VectorField& field) {
    if (!field.all_finite()) throw std::invalid_argument("forward_transform: non-finite samples");
    SpectralField spec(field.grid, field.ncomp());
    const double scale = 1.0 / static_cast<double>(field.grid.size());
    for (int c = 0; c < field.ncomp(); ++c) {
        spec.comp[c] = field.comp[c].cast<std::complex<double>>();
        for (int a = 0; a < field.grid.d; ++a) transform_axis(spec.comp[c], field.grid, a, +1);
        apply_center_phase(spec.comp[c], field.grid);
        spec.comp[c] *= scale;
    }
    return spec;
}

VectorField inverse_transform(const SpectralField& spec) {
    VectorField field(spec.grid, spec.ncomp());
    for (int c = 0; c < spec.ncomp(); ++c) {
        Eigen::ArrayXcd work = spec.comp[c];
        apply_center_phase(work, spec.grid);
        for (int a = 0; a < spec.grid.d; ++a) transform_axis(work, spec.grid, a, -1);
        field.comp[c] = work.real();
    }
    return field;
}

double hermitian_defect(const SpectralField& spec) {
    const SpaceGrid& g = spec.grid;
    double worst = 0.0;
    for (const auto& c : spec.comp) {
        for (Eigen::Index idx = 0; idx < c.size(); ++idx) {
            auto j = g.unflatten(idx);
            std::array<int, 3> jm{0, 0, 0};
            for (int a = 0; a < g.d; ++a) jm[a] = j[a] == 0 ? 0 : g.n - j[a];
            const Eigen::Index midx = g.flatten(jm);
            worst = std::max(worst, std::abs(c[idx] - std::conj(c[midx])));
        }
    }
    return worst;
}

double l2_norm_grid(const VectorField& field) {
    double s = 0.0;
    for (const auto& c : field.comp) s += c.square().sum();
    return std::sqrt(s * std::pow(field.grid.h(), field.grid.d));
}

double l2_norm_spectral(const SpectralField& spec) {
    double s = 0.0;
    for (const auto& c : spec.comp) s += c.abs2().sum();
    return std::sqrt(s * std::pow(2.0 * spec.grid.L, spec.grid.d));
}

SpectralField divergence(const SpectralField& spec) {
    const SpaceGrid& g = spec.grid;
    if (spec.ncomp() != g.d) throw std::invalid_argument("divergence: component count must equal d");
    SpectralField div(g, 1);
    const std::complex<double> I(0.0, 1.0);
    for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
        auto j = g.unflatten(idx);
        std::complex<double> acc(0.0, 0.0);
        for (int a = 0; a < g.d; ++a) acc += I * g.xi(j[a], /*zero_nyquist=*/true) * spec.comp[a][idx];
        div.comp[0][idx] = acc;
    }
    return div;
}

bool is_divergence_free(const SpectralField& spec, double tol) {
    const double ref = spec.max_abs();
    if (ref == 0.0) return true;
    return divergence(spec).max_abs() < tol * ref;
}

}  // namespace fracns
