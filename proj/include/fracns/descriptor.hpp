#pragma once

#include <array>
#include <memory>

#include "fracns/field.hpp"

namespace fracns {

enum class RescaleKind { Velocity, Force, InitialData };

/// The two quantities the natural scaling needs, bundled so descriptors do
/// not depend on the full ModelParams.
struct ModelScaling {
    double alpha;
    int dim;
};

/// Closed-form space-time fields of the separable form
///   F(t,x) = amplitude * t^{-time_power} * profile(x) * direction,
/// covering the catalog: single Fourier modes, Gaussian bumps, and the two
/// counterexample forces (factory presets of these). Descriptors support
/// exact rescaling: F_lambda lands back in the catalog with transformed
/// parameters, so scaling-invariance tests carry no interpolation error.
struct FieldDescriptor {
    enum class Kind { FourierMode, GaussianBump };

    Kind kind = Kind::FourierMode;
    double time_power = 0.0;
    double amplitude = 1.0;
    std::array<double, 3> direction{1.0, 0.0, 0.0};

    // FourierMode: integer wavevector; the physical frequency pi*k/L follows the box.
    std::array<int, 3> mode_k{1, 0, 0};

    // GaussianBump: unit-mass bump of the given width; mean_free subtracts
    // the (analytic) box mean so negative-order operators stay defined.
    double bump_width = 0.5;
    bool mean_free = false;

    /// Spatial profile value at a physical point (d coordinates used).
    double profile_at(const SpaceGrid& grid, const std::array<double, 3>& x) const;

    /// amplitude * t^{-time_power}.
    double time_factor(double t) const;

    VectorField sample(const SpaceGrid& grid) const;
    SpaceTimeVectorField sample(const SpaceGrid& grid, const TimeGrid& tgrid) const;

    FieldDescriptor rescaled(double lambda, RescaleKind rk, const ModelScaling& scaling) const;
};

namespace descriptors {

FieldDescriptor fourier_mode(const std::array<int, 3>& k, const std::array<double, 3>& v0,
                             double time_power = 0.0, double amplitude = 1.0);

FieldDescriptor gaussian_bump(double width, const std::array<double, 3>& v0, bool mean_free = false,
                              double time_power = 0.0, double amplitude = 1.0);

/// Section-6 counterexample force f(t,x) = t^{-rho} psi(x), psi a unit-mass
/// Gaussian bump of width L/8 (mean-removed on the box so that negative
/// Laplacian powers stay defined).
FieldDescriptor force_A(double rho, double L);

/// Section-6 counterexample force g(t,x) = |t|^{-2/5} cos(e0.x) v0 with
/// |e0| = |v0| = 1; e0 is the first-axis unit frequency, so the box must
/// have L = pi for the mode to sit exactly at |xi| = 1.
FieldDescriptor force_B();

}  // namespace descriptors
}  // namespace fracns
