#pragma once

#include <array>

#include "fracns/field.hpp"

namespace fracns {

struct MorreyScan;  // norms.hpp

/// Per mode xi != 0: uhat -> (I - xi xi^T/|xi|^2) uhat; the xi = 0 mode
/// passes through (flagged in the module notes; mean-free data is used
/// wherever it matters). Output is divergence-free in exact spectral
/// arithmetic.
SpectralField leray_project(const SpectralField& spec);

/// Coefficient-wise multiplication by |xi|^s. For s > 0 the xi = 0
/// coefficient is zeroed (|0|^s = 0); for s < 0 a nonzero mean is an error
/// (the inverse operator is not defined there); s = 0 is the identity.
SpectralField fractional_laplacian_power(const SpectralField& spec, double s);

/// Convenience: apply |xi|^s slice-wise to a space-time field.
SpaceTimeVectorField fractional_laplacian_power(const SpaceTimeVectorField& field, double s,
                                                double mean_tol = 1e-12);

/// Parabolic Riesz potential
///   I_s(psi)(t,x) = iint |psi(s,y)| / (|t-s|^{1/alpha} + |x-y|)^{d+alpha-s} dy ds
/// by direct space-time summation with cell weights dt_k h^d; the field is
/// extended by zero outside its time support. The diagonal cell integrates
/// the kernel over a centred cell (equal-volume ball in space) with |psi|
/// frozen at the cell value. 0 < s < d + alpha.
struct RieszConfig {
    double s;
    double alpha;
};

double riesz_potential_at(const SpaceTimeVectorField& field, const RieszConfig& cfg, double t,
                          const std::array<double, 3>& x);

/// Evaluates I_s on every (node, grid point) of the field's own grids;
/// 1-component output. Cost is quadratic in the total sample count, desk
/// scale only.
SpaceTimeVectorField parabolic_riesz_potential(const SpaceTimeVectorField& field, const RieszConfig& cfg);

/// C_alpha membership margin: LHS = I_{alpha-1}(v^2) (kernel exponent d+1)
/// against v itself. Membership holds when sup(LHS - v) <= tol.
struct CalphaReport {
    double max_violation = 0.0;
    double tol = 0.0;
    bool member = false;
    SpaceTimeVectorField margin;  // v - LHS, 1 component
};
CalphaReport calpha_margin(const SpaceTimeVectorField& v, double alpha, double tol = 0.0);

/// Fefferman-Phong sandwich surrogates around the (uncomputable) V_alpha
/// norm: M^{p1,(d+alpha)/(alpha-1)} sits inside V_alpha which sits inside
/// M^{2,(d+alpha)/(alpha-1)}, so (up to the paper's unspecified constants)
///   necessary_lower  (from the M^{2,.} arm)  <~  ||.||_{V_alpha}  <~
///   sufficient_upper (from the M^{p1,.} arm).
/// For the V_alpha^{-1} target the same bracket is applied to
/// sqrt(|(-Delta)^{-1/2} f|), i.e. Morrey norms of |(-Delta)^{-1/2} f| with
/// halved integrability indices.
struct ValphaBounds {
    double necessary_lower = 0.0;   // numerically the smaller Morrey quantity
    double sufficient_upper = 0.0;  // numerically the larger Morrey quantity
    bool target_inverse = false;    // false: V_alpha, true: V_alpha^{-1}
    Eigen::ArrayXd radii;           // per-radius maxima of the lower-arm scan,
    Eigen::ArrayXd lower_by_radius; // for divergence diagnostics
};
ValphaBounds valpha_sandwich_bounds(const SpaceTimeVectorField& field, bool target_inverse, double p1,
                                    double alpha, const MorreyScan& scan);

}  // namespace fracns
