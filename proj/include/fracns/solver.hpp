#pragma once

#include <vector>

#include "fracns/field.hpp"
#include "fracns/norms.hpp"

namespace fracns {

/// p_t * u0 evaluated at every time node (exact per-mode multiplier).
/// u0 must be divergence-free within div_tol.
SpaceTimeVectorField heat_term(const VectorField& u0, const TimeGrid& tgrid, double alpha,
                               double div_tol = 1e-8);

/// int_0^{t_k} p_{t_k - s} * P(f)(s) ds on the graded grid. Cells use the
/// exact semigroup integral against piecewise-linear node data; when the
/// force carries a t^{-a} descriptor the singular head cell [0, t_1]
/// integrates the power factor exactly instead.
SpaceTimeVectorField duhamel_force_term(const SpaceTimeVectorField& f, double alpha);

/// int_0^{t_k} p_{t_k - s} * P(div(u x u))(s) ds; u0 supplies the s = 0
/// value of the integrand.
SpaceTimeVectorField duhamel_bilinear_term(const SpaceTimeVectorField& u, const VectorField& u0,
                                           double alpha);

struct SolveConfig {
    int max_iters = 40;
    double stop_tol = 1e-10;
    enum class Norm { LinftyAlpha, Morrey } norm_choice = Norm::LinftyAlpha;
    double morrey_p1 = 2.5;  // used when norm_choice == Morrey
    MorreyScan scan;
    double div_tol = 1e-8;
    double divergence_guard = 10.0;  // iterate norm > guard * initial bound => non-contraction
};

struct SolveReport {
    std::vector<double> iterate_norms;
    std::vector<double> contraction_factors;  // ||u^{n+1}-u^n|| / ||u^n-u^{n-1}||
    double residual = 0.0;                    // ||u - (U0 + F - B(u,u))|| / ||u||
    bool converged = false;
    bool diverged = false;
    int iterations = 0;
    SpaceTimeVectorField final;
};

/// Picard iteration u^{n+1} = p_t*u0 + Duhamel(f) - B(u^n,u^n), seeded with
/// the first Picard iterate p_t*u0 + Duhamel(f). Divergence (iterate norm
/// exceeding divergence_guard times the data bound) is reported as
/// non-contraction, not thrown.
SolveReport picard_solve(const VectorField& u0, const SpaceTimeVectorField* f, double alpha,
                         const SolveConfig& cfg);

/// Pressure from (-Delta) p = div(div(u x u) - f): spectral solve per slice,
/// zero-mean gauge. Pass f = nullptr for the unforced case.
SpaceTimeVectorField recover_pressure(const SpaceTimeVectorField& u, const SpaceTimeVectorField* f);

/// int_0^t (t-s)^{-a} s^{-b} ds = t^{1-a-b} B(1-a, 1-b) via the Gamma
/// representation; throws for a >= 1 or b >= 1 (divergent integral).
double duhamel_time_integral(double a, double b, double t);

}  // namespace fracns
