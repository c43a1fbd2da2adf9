#pragma once

#include <optional>
#include <string>

#include "fracns/descriptor.hpp"
#include "fracns/field.hpp"
#include "fracns/params.hpp"

namespace fracns {

/// Scan protocol for the sup over radii and centers in the parabolic Morrey
/// quantity: dyadic radii 2^j, j in [j_min, j_max], centers on a strided
/// subgrid of the space-time nodes plus the t = 0 plane (where the
/// counterexample extrema live).
struct MorreyScan {
    int j_min = -2;
    int j_max = 1;
    int space_stride = 2;
    int time_stride = 2;
    bool include_t0_centers = true;

    int levels() const { return j_max - j_min + 1; }
    /// One refinement step: one more octave of small radii, halved strides.
    MorreyScan refined() const {
        MorreyScan s = *this;
        s.j_min -= 1;
        s.space_stride = std::max(1, space_stride / 2);
        s.time_stride = std::max(1, time_stride / 2);
        return s;
    }
};

/// Estimator output: the value plus enough metadata to judge it.
struct NormReport {
    double value = 0.0;
    std::string estimator;
    double refinement_delta = -1.0;  // relative change under one refinement; <0 = not measured
    Eigen::ArrayXd radii;            // per-radius scan maxima (scanned norms only)
    Eigen::ArrayXd value_by_radius;
};

/// sup_k t_k^{(alpha-1)/alpha} max|u(t_k,.)|.
NormReport linfty_alpha_norm(const SpaceTimeVectorField& u, double alpha);

/// sup_k t_k^rho || (-Delta)^{-beta/2} f(t_k,.) ||_{L^{p0}} (p0 = inf -> max).
/// Slices must be mean-free (within mean_tol of the field's scale).
NormReport force_F_norm(const SpaceTimeVectorField& f, const Thm1Indices& idx, double mean_tol = 1e-10);

/// Parabolic Morrey norm estimate per the cylinder definition
///   sup_{r,(t,x)} r^{-(d+alpha)(1/p-1/q)} (iint_{|t-s|^{1/alpha}+|x-y|<r} |psi|^p)^{1/p},
/// cylinder integrals by direct cell summation, torus metric (radii capped
/// at L so the nearest-image ball is exact).
NormReport parabolic_morrey_norm(const SpaceTimeVectorField& field, double alpha, double p, double q,
                                 const MorreyScan& scan, bool with_refinement = false);

/// || (-Delta)^{-gamma/2} psi ||_{M^{p,q}} (operator slice-wise in space).
NormReport morrey_sobolev_norm(const SpaceTimeVectorField& field, double alpha, double gamma, double p,
                               double q, const MorreyScan& scan, bool with_refinement = false);

/// Thermic characterization of the Besov norm B^{-s,inf}_inf:
///   heat variant:       sup_t t^{s/2}     ||h_t * psi||_inf
///   fractional variant: sup_t t^{s/alpha} ||p_t * psi||_inf
/// with the sup taken over a log-spaced t grid (octaves j_min..j_max,
/// points_per_octave samples each).
enum class ThermicVariant { Heat, Fractional };
struct LogTimeWindow {
    int j_min = -8;
    int j_max = 6;
    int points_per_octave = 8;
};
NormReport besov_thermic_norm(const VectorField& psi, double s, ThermicVariant variant, double alpha,
                              const LogTimeWindow& window = {});

/// u_lambda(t,x) = lambda^{alpha-1} u(lambda^alpha t, lambda x) (velocity),
/// lambda^{2alpha-1} prefactor for forces. The rescaled grids (box L/lambda,
/// horizon T/lambda^alpha) have nodes that map exactly onto the original
/// ones, so sample re-evaluation is exact; descriptor-backed fields also
/// rescale their descriptor.
SpaceTimeVectorField rescale(const SpaceTimeVectorField& field, double lambda, RescaleKind kind,
                             const ModelScaling& scaling);
VectorField rescale_initial(const VectorField& u0, double lambda, const ModelScaling& scaling);

/// Descriptor-exact cylinder quantity of a Fourier-mode descriptor at the
/// space-time origin:
///   Q(r) = r^{-(d+alpha)(1/p-1/q)} (int_0^{r^alpha} s^{-a p} V_p(r - s^{1/alpha}) ds)^{1/p},
/// V_p(rho) = int_{B(0,rho)} |cos(xi_k . y)|^p dy evaluated by quadrature on
/// R^d (no box truncation): this is how the counterexample growth in r is
/// measured beyond the grid box.
double cylinder_quantity_at_origin(const FieldDescriptor& desc, const SpaceGrid& grid, double alpha,
                                   double p, double q, double r);

/// L^p norm on the box grid, h^d cell weights; p = inf -> max.
double lp_norm_grid(const VectorField& field, double p);

}  // namespace fracns
