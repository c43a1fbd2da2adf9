#pragma once

#include <Eigen/Dense>

#include "fracns/field.hpp"

namespace fracns {

/// Homogeneous Fourier symbol sigma(xi), sigma(lambda xi) = lambda^degree sigma(xi):
///   Power:          |xi|^degree
///   ComponentRatio: xi_axis / |xi|                    (degree 0)
///   RatioPower:     (xi_axis / |xi|) * |xi|^degree
struct SymbolSpec {
    enum class Kind { Power, ComponentRatio, RatioPower };
    Kind kind = Kind::Power;
    double degree = 0.0;
    int axis = 0;

    double operator()(const Eigen::Vector3d& xi, int d) const;
    bool radial() const { return kind == Kind::Power; }

    static SymbolSpec identity() { return {Kind::Power, 0.0, 0}; }
    static SymbolSpec power(double degree) { return {Kind::Power, degree, 0}; }
};

/// Multiplies each coefficient by e^{-t |xi|^alpha}; t = 0 is the identity.
SpectralField apply_semigroup(const SpectralField& spec, double t, double alpha);

/// Multiplies each coefficient by sigma(xi) e^{-t |xi|^alpha}; the xi = 0
/// coefficient passes through only for sigma == 1 (degree-0 Power), else it
/// is zeroed.
SpectralField apply_homogeneous_symbol_kernel(const SpectralField& spec, const SymbolSpec& sym, double t,
                                              double alpha);

/// Physical-space radial samples of the kernel with symbol |xi|^degree
/// (degree = 0 gives the fractional heat kernel p_t). d in {1,3}:
///   d=1: (1/pi)      int_0^inf k^degree  cos(kr) e^{-t k^alpha} dk
///   d=3: (1/2pi^2 r) int_0^inf k^{1+degree} sin(kr) e^{-t k^alpha} dk
struct RadialProfile {
    double alpha = 1.5;
    int d = 1;
    double t = 1.0;
    double symbol_degree = 0.0;
    Eigen::ArrayXd radii;
    Eigen::ArrayXd values;
    double quad_tol = 0.0;  // per-point absolute tolerance requested
};

/// Radii are r_max * i/(n_r - 1), i = 0..n_r-1 (r = 0 evaluated by the limit
/// formula). Oscillatory quadrature is truncated where t k^alpha > 46 and
/// panel-refined to `tol`.
RadialProfile kernel_radial_profile(double alpha, int d, double t, double r_max, int n_r,
                                    double tol = 1e-10, double symbol_degree = 0.0);

/// Single radial kernel value (same formulas as kernel_radial_profile).
double kernel_radial_value(double alpha, int d, double t, double r, double tol = 1e-10,
                           double symbol_degree = 0.0);

/// Extrema over the profile of p_t(r) (t^{1/alpha}+r)^{d+alpha} / t. Throws
/// if any profile value is non-positive (the kernel bound requires a
/// positive kernel).
struct BoundRatio {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};
BoundRatio verify_kernel_bound_ratio(const RadialProfile& profile);

/// L^p(R^d) norm of the kernel with radial symbol |xi|^degree, by radial
/// quadrature over r <= y_max * t^{1/alpha}. The truncation radius scales
/// with t^{1/alpha}, so ratios across t reproduce the exact homogeneity
/// exponent d/(alpha p) - (d+degree)/alpha. Requires degree > -d/p'.
double ksigma_lp_norm(const SymbolSpec& sym, double t, double alpha, double p, int d,
                      double y_max = 64.0, int subpanels_per_unit = 1);

}  // namespace fracns
