#include "fracns/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fracns/operators.hpp"
#include "fracns/semigroup.hpp"
#include "fracns/quadrature.hpp"
#include "fracns/transform.hpp"

namespace fracns {

NormReport linfty_alpha_norm(const SpaceTimeVectorField& u, double alpha) {
    NormReport rep;
    rep.estimator = "linfty_alpha_timegrid_sup";
    const double w = (alpha - 1.0) / alpha;
    double best = 0.0;
    for (int k = 0; k < u.tgrid.N; ++k) {
        const double t = u.tgrid.node(k);
        best = std::max(best, std::pow(t, w) * u.slices[k].magnitude().maxCoeff());
    }
    rep.value = best;
    return rep;
}

double lp_norm_grid(const VectorField& field, double p) {
    const Eigen::ArrayXd mag = field.magnitude();
    if (std::isinf(p)) return mag.maxCoeff();
    const double cellw = std::pow(field.grid.h(), field.grid.d);
    return std::pow((mag.pow(p)).sum() * cellw, 1.0 / p);
}

NormReport force_F_norm(const SpaceTimeVectorField& f, const Thm1Indices& idx, double /*mean_tol*/) {
    if (!idx.admissible) throw std::invalid_argument("force_F_norm: inadmissible Theorem-1 indices");
    NormReport rep;
    rep.estimator = "force_F_timegrid_sup";
    const double rho = idx.rho.value();
    const double beta = idx.beta.value();
    const double p0 = idx.p0.infinite ? std::numeric_limits<double>::infinity() : idx.p0.value.value();
    double best = 0.0;
    for (int k = 0; k < f.tgrid.N; ++k) {
        const SpectralField spec = forward_transform(f.slices[k]);
        const VectorField smoothed = inverse_transform(fractional_laplacian_power(spec, -beta));
        best = std::max(best, std::pow(f.tgrid.node(k), rho) * lp_norm_grid(smoothed, p0));
    }
    rep.value = best;
    return rep;
}

namespace {

struct SortedOffsets {
    // Spatial displacement classes sorted by nearest-image distance.
    std::vector<double> dist;                  // ascending
    std::vector<std::array<int, 3>> offset;    // per-axis offsets in [0, n)
};

SortedOffsets build_sorted_offsets(const SpaceGrid& g) {
    SortedOffsets so;
    const Eigen::Index sz = g.size();
    const double h = g.h();
    std::vector<std::pair<double, Eigen::Index>> tmp(sz);
    for (Eigen::Index o = 0; o < sz; ++o) {
        auto j = g.unflatten(o);
        double dist2 = 0.0;
        for (int a = 0; a < g.d; ++a) {
            const int delta = j[a] <= g.n / 2 ? j[a] : g.n - j[a];
            dist2 += static_cast<double>(delta) * delta;
        }
        tmp[o] = {h * std::sqrt(dist2), o};
    }
    std::sort(tmp.begin(), tmp.end());
    so.dist.resize(sz);
    so.offset.resize(sz);
    for (Eigen::Index i = 0; i < sz; ++i) {
        so.dist[i] = tmp[i].first;
        so.offset[i] = g.unflatten(tmp[i].second);
    }
    return so;
}

struct ScanResult {
    double value = 0.0;
    Eigen::ArrayXd radii;
    Eigen::ArrayXd by_radius;
};

// Core cylinder scan of |psi|^p with cell weights dt_k h^d over dyadic radii
// and strided centers (grid nodes plus the t = 0 plane).
ScanResult morrey_scan_power(const std::vector<Eigen::ArrayXd>& powed, const SpaceGrid& g,
                             const TimeGrid& tg, double alpha, double p, double q,
                             const MorreyScan& scan) {
    if (!(p <= q)) throw std::invalid_argument("morrey scan: need p <= q");
    if (scan.levels() < 4) throw std::invalid_argument("morrey scan: need at least 4 dyadic radius levels");

    const SortedOffsets so = build_sorted_offsets(g);
    const double h = g.h();
    const double cellw = std::pow(h, g.d);
    const double inv_alpha = 1.0 / alpha;
    const double weight_exp = (g.d + alpha) * (1.0 / p - 1.0 / q);

    std::vector<double> radii;
    for (int j = scan.j_min; j <= scan.j_max; ++j) {
        const double r = std::ldexp(1.0, j);
        if (r <= g.L * (1.0 + 1e-12)) radii.push_back(r);
    }
    if (radii.size() < 4) throw std::invalid_argument("morrey scan: radius window exceeds the box (r <= L)");

    // Center sets.
    std::vector<int> tcenters;  // -1 encodes t = 0
    if (scan.include_t0_centers) tcenters.push_back(-1);
    for (int k = 0; k < tg.N; k += scan.time_stride) tcenters.push_back(k);
    std::vector<Eigen::Index> xcenters;
    {
        std::array<int, 3> j{0, 0, 0};
        const int s = scan.space_stride;
        if (g.d == 1) {
            for (j[0] = 0; j[0] < g.n; j[0] += s) xcenters.push_back(g.flatten(j));
        } else if (g.d == 2) {
            for (j[0] = 0; j[0] < g.n; j[0] += s)
                for (j[1] = 0; j[1] < g.n; j[1] += s) xcenters.push_back(g.flatten(j));
        } else {
            for (j[0] = 0; j[0] < g.n; j[0] += s)
                for (j[1] = 0; j[1] < g.n; j[1] += s)
                    for (j[2] = 0; j[2] < g.n; j[2] += s) xcenters.push_back(g.flatten(j));
        }
    }

    std::vector<double> best_by_radius(radii.size(), 0.0);
    std::vector<int> wrap(2 * g.n);
    for (int i = 0; i < 2 * g.n; ++i) wrap[i] = i % g.n;

    for (int tc : tcenters) {
        const double t_center = tc < 0 ? 0.0 : tg.node(tc);
        // Participating slabs and their time offsets, shared across radii.
        std::vector<std::pair<int, double>> slabs;  // (node index, |t-s|^{1/alpha})
        for (int k = 0; k < tg.N; ++k) {
            const double delta = std::pow(std::abs(t_center - tg.node(k)), inv_alpha);
            if (delta < radii.back()) slabs.push_back({k, delta});
        }
        for (Eigen::Index xc : xcenters) {
            const auto jc = g.unflatten(xc);
            for (std::size_t ri = 0; ri < radii.size(); ++ri) {
                const double r = radii[ri];
                double acc = 0.0;
                for (const auto& [k, delta] : slabs) {
                    if (delta >= r) continue;
                    const double rho = r - delta;
                    const auto cut = std::upper_bound(so.dist.begin(), so.dist.end(),
                                                      rho * (1.0 - 1e-14)) - so.dist.begin();
                    const Eigen::ArrayXd& src = powed[k];
                    double slab_sum = 0.0;
                    for (Eigen::Index i = 0; i < cut; ++i) {
                        const auto& off = so.offset[i];
                        std::array<int, 3> js{0, 0, 0};
                        for (int a = 0; a < g.d; ++a) js[a] = wrap[jc[a] + off[a]];
                        slab_sum += src[g.flatten(js)];
                    }
                    acc += slab_sum * tg.cell_width(k);
                }
                const double quantity = std::pow(r, -weight_exp) * std::pow(acc * cellw, 1.0 / p);
                best_by_radius[ri] = std::max(best_by_radius[ri], quantity);
            }
        }
    }

    ScanResult res;
    res.radii = Eigen::Map<const Eigen::ArrayXd>(radii.data(), radii.size());
    res.by_radius = Eigen::Map<const Eigen::ArrayXd>(best_by_radius.data(), best_by_radius.size());
    res.value = res.by_radius.size() ? res.by_radius.maxCoeff() : 0.0;
    return res;
}

std::vector<Eigen::ArrayXd> magnitude_powers(const SpaceTimeVectorField& field, double p) {
    std::vector<Eigen::ArrayXd> powed(field.tgrid.N);
    for (int k = 0; k < field.tgrid.N; ++k) {
        const Eigen::ArrayXd mag = field.slices[k].magnitude();
        powed[k] = p == 1.0 ? mag : (p == 2.0 ? mag.square().eval() : mag.pow(p).eval());
    }
    return powed;
}

}  // namespace

NormReport parabolic_morrey_norm(const SpaceTimeVectorField& field, double alpha, double p, double q,
                                 const MorreyScan& scan, bool with_refinement) {
    NormReport rep;
    rep.estimator = "parabolic_morrey_scan";
    const auto powed = magnitude_powers(field, p);
    const ScanResult base = morrey_scan_power(powed, field.sgrid, field.tgrid, alpha, p, q, scan);
    rep.value = base.value;
    rep.radii = base.radii;
    rep.value_by_radius = base.by_radius;
    if (with_refinement) {
        const ScanResult fine =
            morrey_scan_power(powed, field.sgrid, field.tgrid, alpha, p, q, scan.refined());
        rep.refinement_delta = std::abs(fine.value - base.value) / std::max(fine.value, 1e-300);
    }
    return rep;
}

NormReport morrey_sobolev_norm(const SpaceTimeVectorField& field, double alpha, double gamma, double p,
                               double q, const MorreyScan& scan, bool with_refinement) {
    SpaceTimeVectorField smoothed(field.sgrid, field.tgrid, field.ncomp());
    for (int k = 0; k < field.tgrid.N; ++k) {
        const SpectralField spec = forward_transform(field.slices[k]);
        smoothed.slices[k] = inverse_transform(fractional_laplacian_power(spec, -gamma));
    }
    NormReport rep = parabolic_morrey_norm(smoothed, alpha, p, q, scan, with_refinement);
    rep.estimator = "morrey_sobolev_scan";
    return rep;
}

NormReport besov_thermic_norm(const VectorField& psi, double s, ThermicVariant variant, double alpha,
                              const LogTimeWindow& window) {
    if (!(s > 0.0)) throw std::invalid_argument("besov_thermic_norm: need s > 0");
    NormReport rep;
    rep.estimator = variant == ThermicVariant::Heat ? "besov_thermic_heat" : "besov_thermic_fractional";
    const SpectralField spec = forward_transform(psi);
    const double order = variant == ThermicVariant::Heat ? 2.0 : alpha;
    const double weight_exp = variant == ThermicVariant::Heat ? 0.5 * s : s / alpha;
    double best = 0.0;
    const int ppo = window.points_per_octave;
    for (int j = window.j_min * ppo; j <= window.j_max * ppo; ++j) {
        const double t = std::pow(2.0, static_cast<double>(j) / ppo);
        const VectorField smoothed = inverse_transform(apply_semigroup(spec, t, order));
        best = std::max(best, std::pow(t, weight_exp) * smoothed.magnitude().maxCoeff());
    }
    rep.value = best;
    return rep;
}

SpaceTimeVectorField rescale(const SpaceTimeVectorField& field, double lambda, RescaleKind kind,
                             const ModelScaling& scaling) {
    if (!(lambda > 0.0)) throw std::invalid_argument("rescale: lambda must be positive");
    const double e = kind == RescaleKind::Force ? 2.0 * scaling.alpha - 1.0 : scaling.alpha - 1.0;
    const double amp = std::pow(lambda, e);
    SpaceGrid sg(field.sgrid.d, field.sgrid.n, field.sgrid.L / lambda);
    TimeGrid tg = TimeGrid::graded(field.tgrid.T / std::pow(lambda, scaling.alpha), field.tgrid.N,
                                   field.tgrid.kappa);
    SpaceTimeVectorField out(sg, tg, field.ncomp());
    // New nodes satisfy lambda^alpha t'_k = t_k and lambda x'_j = x_j, so
    // re-evaluation is an exact sample copy.
    for (int k = 0; k < tg.N; ++k)
        for (int c = 0; c < field.ncomp(); ++c) out.slices[k].comp[c] = amp * field.slices[k].comp[c];
    if (field.descriptor)
        out.descriptor = std::make_shared<FieldDescriptor>(field.descriptor->rescaled(lambda, kind, scaling));
    return out;
}

VectorField rescale_initial(const VectorField& u0, double lambda, const ModelScaling& scaling) {
    if (!(lambda > 0.0)) throw std::invalid_argument("rescale_initial: lambda must be positive");
    SpaceGrid sg(u0.grid.d, u0.grid.n, u0.grid.L / lambda);
    VectorField out(sg, u0.ncomp());
    const double amp = std::pow(lambda, scaling.alpha - 1.0);
    for (int c = 0; c < u0.ncomp(); ++c) out.comp[c] = amp * u0.comp[c];
    return out;
}

double cylinder_quantity_at_origin(const FieldDescriptor& desc, const SpaceGrid& grid, double alpha,
                                   double p, double q, double r) {
    if (desc.kind != FieldDescriptor::Kind::FourierMode)
        throw std::invalid_argument("cylinder_quantity_at_origin: Fourier-mode descriptors only");
    const int d = grid.d;
    double omega2 = 0.0;
    for (int a = 0; a < d; ++a) {
        const double xi = M_PI * desc.mode_k[a] / grid.L;
        omega2 += xi * xi;
    }
    const double omega = std::sqrt(omega2);
    double dirnorm = 0.0;
    for (int a = 0; a < d; ++a) dirnorm += desc.direction[a] * desc.direction[a];
    dirnorm = std::sqrt(dirnorm);

    // V_p(rho) = int_{B(0,rho)} |cos(omega u1)|^p du over R^d.
    auto vp = [&](double rho) {
        if (rho <= 0.0) return 0.0;
        auto profile = [&](double u) { return std::pow(std::abs(std::cos(omega * u)), p); };
        if (d == 1) return 2.0 * quadrature::oscillatory(profile, 0.0, rho, M_PI / std::max(omega, 1e-12), 1e-11);
        if (d == 2) {
            auto f = [&](double u) { return profile(u) * 2.0 * std::sqrt(rho * rho - u * u); };
            return 2.0 * quadrature::oscillatory(f, 0.0, rho, M_PI / std::max(omega, 1e-12), 1e-11);
        }
        auto f = [&](double u) { return profile(u) * M_PI * (rho * rho - u * u); };
        return 2.0 * quadrature::oscillatory(f, 0.0, rho, M_PI / std::max(omega, 1e-12), 1e-11);
    };

    const double ap = desc.time_power * p;
    if (!(ap < 1.0))
        throw std::domain_error("cylinder_quantity_at_origin: t-power not locally p-integrable (a*p >= 1)");
    const double t_extent = std::pow(r, alpha);
    auto f = [&](double s) { return std::pow(s, -ap) * vp(r - std::pow(s, 1.0 / alpha)); };
    const double integral = quadrature::singular_left(f, t_extent, ap, 1e-9, 48);
    const double weight_exp = (d + alpha) * (1.0 / p - 1.0 / q);
    const double ampl = std::pow(std::abs(desc.amplitude) * dirnorm, p);
    return std::pow(r, -weight_exp) * std::pow(ampl * integral, 1.0 / p);
}

}  // namespace fracns
