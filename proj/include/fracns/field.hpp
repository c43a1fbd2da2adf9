#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "fracns/grid.hpp"

namespace fracns {

struct FieldDescriptor;  // analytic closed forms, see descriptor.hpp

/// Real samples of an m-component field on a SpaceGrid (m = grid.d for
/// velocities and forces, m = 1 for scalars). Flattened row-major.
struct VectorField {
    SpaceGrid grid;
    std::vector<Eigen::ArrayXd> comp;

    VectorField() = default;
    VectorField(const SpaceGrid& g, int ncomp) : grid(g) {
        comp.assign(ncomp, Eigen::ArrayXd::Zero(g.size()));
    }
    int ncomp() const { return static_cast<int>(comp.size()); }

    bool all_finite() const {
        for (const auto& c : comp)
            if (!c.allFinite()) return false;
        return true;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp) m = std::max(m, c.size() ? c.abs().maxCoeff() : 0.0);
        return m;
    }
    /// Pointwise Euclidean magnitude across components.
    Eigen::ArrayXd magnitude() const {
        Eigen::ArrayXd m = Eigen::ArrayXd::Zero(grid.size());
        for (const auto& c : comp) m += c.square();
        return m.sqrt();
    }
};

/// Fourier coefficients of a VectorField, FFT slot order per axis.
/// Hermitian symmetry (conj at -k) holds whenever the physical field is real.
struct SpectralField {
    SpaceGrid grid;
    std::vector<Eigen::ArrayXcd> comp;

    SpectralField() = default;
    SpectralField(const SpaceGrid& g, int ncomp) : grid(g) {
        comp.assign(ncomp, Eigen::ArrayXcd::Zero(g.size()));
    }
    int ncomp() const { return static_cast<int>(comp.size()); }

    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comp) m = std::max(m, c.size() ? c.abs().maxCoeff() : 0.0);
        return m;
    }
};

/// Time-indexed stack of VectorFields on a shared SpaceGrid. When the field
/// came from a closed-form descriptor the descriptor rides along, so norms
/// and rescalings can re-evaluate exactly instead of interpolating.
struct SpaceTimeVectorField {
    SpaceGrid sgrid;
    TimeGrid tgrid;
    std::vector<VectorField> slices;  // one per tgrid node, t > 0
    std::shared_ptr<const FieldDescriptor> descriptor;

    SpaceTimeVectorField() = default;
    SpaceTimeVectorField(const SpaceGrid& sg, const TimeGrid& tg, int ncomp) : sgrid(sg), tgrid(tg) {
        slices.assign(tg.N, VectorField(sg, ncomp));
    }
    int ncomp() const { return slices.empty() ? 0 : slices.front().ncomp(); }

    double max_abs() const {
        double m = 0.0;
        for (const auto& s : slices) m = std::max(m, s.max_abs());
        return m;
    }
};

inline VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (int c = 0; c < out.ncomp(); ++c) out.comp[c] += b.comp[c];
    return out;
}
inline VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField out = a;
    for (int c = 0; c < out.ncomp(); ++c) out.comp[c] -= b.comp[c];
    return out;
}
inline VectorField operator*(double s, const VectorField& a) {
    VectorField out = a;
    for (int c = 0; c < out.ncomp(); ++c) out.comp[c] *= s;
    return out;
}

inline SpaceTimeVectorField operator+(const SpaceTimeVectorField& a, const SpaceTimeVectorField& b) {
    SpaceTimeVectorField out = a;
    out.descriptor.reset();
    for (std::size_t k = 0; k < out.slices.size(); ++k) out.slices[k] = out.slices[k] + b.slices[k];
    return out;
}
inline SpaceTimeVectorField operator-(const SpaceTimeVectorField& a, const SpaceTimeVectorField& b) {
    SpaceTimeVectorField out = a;
    out.descriptor.reset();
    for (std::size_t k = 0; k < out.slices.size(); ++k) out.slices[k] = out.slices[k] - b.slices[k];
    return out;
}
inline SpaceTimeVectorField operator*(double s, const SpaceTimeVectorField& a) {
    SpaceTimeVectorField out = a;
    out.descriptor.reset();
    for (auto& sl : out.slices) sl = s * sl;
    return out;
}

}  // namespace fracns
