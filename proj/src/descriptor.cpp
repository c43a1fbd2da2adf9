#include "fracns/descriptor.hpp"

#include <cmath>
#include <stdexcept>

namespace fracns {
namespace {

double bump_unit_mass_value(double width, int d, const std::array<double, 3>& x) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) r2 += x[a] * x[a];
    const double norm = std::pow(2.0 * M_PI * width * width, -0.5 * d);
    return norm * std::exp(-r2 / (2.0 * width * width));
}

// Box mean of the truncated unit-mass Gaussian, exact via erf.
double bump_box_mean(double width, int d, double L) {
    const double mass_1d = std::erf(L / (std::sqrt(2.0) * width));
    return std::pow(mass_1d, d) / std::pow(2.0 * L, d);
}

}  // namespace

double FieldDescriptor::profile_at(const SpaceGrid& grid, const std::array<double, 3>& x) const {
    switch (kind) {
        case Kind::FourierMode: {
            double phase = 0.0;
            for (int a = 0; a < grid.d; ++a) phase += M_PI * mode_k[a] / grid.L * x[a];
            return std::cos(phase);
        }
        case Kind::GaussianBump: {
            double v = bump_unit_mass_value(bump_width, grid.d, x);
            if (mean_free) v -= bump_box_mean(bump_width, grid.d, grid.L);
            return v;
        }
    }
    return 0.0;
}

double FieldDescriptor::time_factor(double t) const {
    if (time_power != 0.0 && !(t > 0.0))
        throw std::domain_error("FieldDescriptor: t-power descriptors are only evaluated at t > 0");
    return amplitude * std::pow(t, -time_power);
}

VectorField FieldDescriptor::sample(const SpaceGrid& grid) const {
    VectorField f(grid, grid.d);
    const Eigen::Index sz = grid.size();
    for (Eigen::Index idx = 0; idx < sz; ++idx) {
        auto j = grid.unflatten(idx);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int a = 0; a < grid.d; ++a) x[a] = grid.coord(j[a]);
        const double v = amplitude * profile_at(grid, x);
        for (int c = 0; c < grid.d; ++c) f.comp[c][idx] = v * direction[c];
    }
    if (!f.all_finite()) throw std::domain_error("FieldDescriptor: non-finite sample");
    return f;
}

SpaceTimeVectorField FieldDescriptor::sample(const SpaceGrid& grid, const TimeGrid& tgrid) const {
    SpaceTimeVectorField out(grid, tgrid, grid.d);
    FieldDescriptor spatial = *this;
    spatial.amplitude = 1.0;
    spatial.time_power = 0.0;
    const VectorField profile = spatial.sample(grid);
    for (int k = 0; k < tgrid.N; ++k) {
        const double w = time_factor(tgrid.node(k));
        for (int c = 0; c < grid.d; ++c) out.slices[k].comp[c] = w * profile.comp[c];
    }
    out.descriptor = std::make_shared<FieldDescriptor>(*this);
    return out;
}

FieldDescriptor FieldDescriptor::rescaled(double lambda, RescaleKind rk, const ModelScaling& s) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("rescale: lambda must be positive");
    double exponent = 0.0;
    switch (rk) {
        case RescaleKind::Velocity: exponent = s.alpha - 1.0; break;
        case RescaleKind::Force: exponent = 2.0 * s.alpha - 1.0; break;
        case RescaleKind::InitialData: exponent = s.alpha - 1.0; break;
    }
    FieldDescriptor out = *this;
    // F_lambda(t,x) = lambda^e * amp * (lambda^alpha t)^{-a} * profile(lambda x)
    out.amplitude = amplitude * std::pow(lambda, exponent - s.alpha * time_power);
    if (kind == Kind::GaussianBump) {
        // G_w(lambda x) = lambda^{-d} G_{w/lambda}(x) for unit-mass bumps.
        out.bump_width = bump_width / lambda;
        out.amplitude *= std::pow(lambda, -static_cast<double>(s.dim));
    }
    // Fourier modes keep their integer wavevector: the box contracts to
    // L/lambda, so pi*k/(L/lambda) = lambda * (pi*k/L) is exactly the
    // rescaled frequency.
    return out;
}

namespace descriptors {

FieldDescriptor fourier_mode(const std::array<int, 3>& k, const std::array<double, 3>& v0,
                             double time_power, double amplitude) {
    FieldDescriptor d;
    d.kind = FieldDescriptor::Kind::FourierMode;
    d.mode_k = k;
    d.direction = v0;
    d.time_power = time_power;
    d.amplitude = amplitude;
    return d;
}

FieldDescriptor gaussian_bump(double width, const std::array<double, 3>& v0, bool mean_free,
                              double time_power, double amplitude) {
    FieldDescriptor d;
    d.kind = FieldDescriptor::Kind::GaussianBump;
    d.bump_width = width;
    d.direction = v0;
    d.mean_free = mean_free;
    d.time_power = time_power;
    d.amplitude = amplitude;
    return d;
}

FieldDescriptor force_A(double rho, double L) {
    return gaussian_bump(L / 8.0, {1.0, 0.0, 0.0}, /*mean_free=*/true, rho, 1.0);
}

FieldDescriptor force_B() {
    return fourier_mode({1, 0, 0}, {0.0, 1.0, 0.0}, /*time_power=*/0.4, 1.0);
}

}  // namespace descriptors
}  // namespace fracns
