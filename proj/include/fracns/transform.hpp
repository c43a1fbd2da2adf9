#pragma once

#include "fracns/field.hpp"

namespace fracns {

/// Forward DFT with coefficient normalization u(x) = sum_k uhat_k e^{i xi_k . x},
/// xi_k = pi k / L. Throws on non-finite samples.
SpectralField forward_transform(const VectorField& field);

/// Inverse of forward_transform; imaginary residue (from Hermitian
/// round-off) is dropped.
VectorField inverse_transform(const SpectralField& spec);

/// Max |coef(k) - conj(coef(-k))| over all modes and components.
double hermitian_defect(const SpectralField& spec);

/// L2 norm over the box computed on the grid: (h^d sum |u|^2)^{1/2}.
double l2_norm_grid(const VectorField& field);

/// L2 norm from coefficients: ((2L)^d sum |uhat|^2)^{1/2} (Parseval).
double l2_norm_spectral(const SpectralField& spec);

/// Divergence i xi . uhat as a 1-component spectral field. Nyquist modes are
/// zeroed (odd multiplier).
SpectralField divergence(const SpectralField& spec);

/// True iff max mode magnitude of the divergence < tol * max mode magnitude
/// of the field itself (zero fields pass).
bool is_divergence_free(const SpectralField& spec, double tol = 1e-10);

}  // namespace fracns
