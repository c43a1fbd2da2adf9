#include "fracns/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "fracns/descriptor.hpp"
#include "fracns/operators.hpp"
#include "fracns/transform.hpp"

namespace fracns {
namespace {

// Stable evaluations of g1(x) = (1 - e^-x)/x and g2(x) = (1 - (1+x)e^-x)/x^2.
double g1(double x) {
    if (x < 1e-5) return 1.0 - 0.5 * x + x * x / 6.0;
    return -std::expm1(-x) / x;
}
double g2(double x) {
    if (x < 1e-4) return 0.5 - x / 3.0 + x * x / 8.0;
    return (1.0 - (1.0 + x) * std::exp(-x)) / (x * x);
}

// Exact-semigroup weights for one cell of width dt against linear data:
// integral = wl * H_left + wr * H_right.
void cell_weights(double mu, double dt, double& wl, double& wr) {
    const double x = mu * dt;
    const double i0 = dt * g1(x);
    const double i1 = dt * (g1(x) - g2(x));
    wl = i0 - i1;
    wr = i1;
}

Eigen::ArrayXd semigroup_exponents(const SpaceGrid& g, double alpha) {
    Eigen::ArrayXd mu(g.size());
    for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
        auto j = g.unflatten(idx);
        double norm2 = 0.0;
        for (int a = 0; a < g.d; ++a) {
            const double xi = g.xi(j[a]);
            norm2 += xi * xi;
        }
        mu[idx] = std::pow(norm2, 0.5 * alpha);
    }
    return mu;
}

// P(div(u x u)) in spectral space from a physical slice.
SpectralField projected_advection(const VectorField& u) {
    const SpaceGrid& g = u.grid;
    const int d = g.d;
    // Symmetric tensor components u_a u_b, a <= b.
    std::vector<SpectralField> that;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) pairs.push_back({a, b});
    VectorField tensor(g, static_cast<int>(pairs.size()));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        tensor.comp[i] = u.comp[pairs[i].first] * u.comp[pairs[i].second];
    const SpectralField tspec = forward_transform(tensor);

    SpectralField div(g, d);
    const std::complex<double> I(0.0, 1.0);
    for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
        auto j = g.unflatten(idx);
        std::array<double, 3> xi{0.0, 0.0, 0.0};
        for (int a = 0; a < d; ++a) xi[a] = g.xi(j[a], /*zero_nyquist=*/true);
        for (int c = 0; c < d; ++c) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto [a, b] = pairs[i];
                if (a == c) acc += I * xi[b] * tspec.comp[i][idx];
                else if (b == c) acc += I * xi[a] * tspec.comp[i][idx];
            }
            div.comp[c][idx] = acc;
        }
    }
    return leray_project(div);
}

}  // namespace

SpaceTimeVectorField heat_term(const VectorField& u0, const TimeGrid& tgrid, double alpha,
                               double div_tol) {
    const SpectralField u0hat = forward_transform(u0);
    if (!is_divergence_free(u0hat, div_tol))
        throw std::invalid_argument("heat_term: u0 is not divergence-free within tolerance");
    const Eigen::ArrayXd mu = semigroup_exponents(u0.grid, alpha);
    SpaceTimeVectorField out(u0.grid, tgrid, u0.ncomp());
    for (int k = 0; k < tgrid.N; ++k) {
        SpectralField s(u0.grid, u0.ncomp());
        const Eigen::ArrayXd damp = (-tgrid.node(k) * mu).exp();
        for (int c = 0; c < u0.ncomp(); ++c) s.comp[c] = u0hat.comp[c] * damp;
        out.slices[k] = inverse_transform(s);
    }
    return out;
}

SpaceTimeVectorField duhamel_force_term(const SpaceTimeVectorField& f, double alpha) {
    const SpaceGrid& g = f.sgrid;
    const TimeGrid& tg = f.tgrid;
    const int d = g.d;
    const Eigen::ArrayXd mu = semigroup_exponents(g, alpha);

    std::vector<SpectralField> fhat(tg.N);
    for (int k = 0; k < tg.N; ++k) fhat[k] = leray_project(forward_transform(f.slices[k]));

    const double tpow = f.descriptor ? f.descriptor->time_power : 0.0;
    if (tpow >= 1.0) throw std::domain_error("duhamel_force_term: force t-power must satisfy a < 1");

    SpaceTimeVectorField out(g, tg, d);
    std::vector<Eigen::ArrayXcd> acc(d, Eigen::ArrayXcd::Zero(g.size()));
    for (int k = 0; k < tg.N; ++k) {
        const double dt = tg.cell_width(k);
        if (k == 0) {
            const double t1 = tg.node(0);
            if (tpow > 0.0) {
                // Exact integral of s^{-a} over [0, t1]; semigroup frozen at
                // the centroid of the power weight.
                const double centroid = t1 * (1.0 - tpow) / (2.0 - tpow);
                const double power_int = std::pow(t1, 1.0 - tpow) / (1.0 - tpow);
                const double scale = power_int * std::pow(t1, tpow);  // applied to nodal data f(t1)
                for (int c = 0; c < d; ++c)
                    acc[c] = fhat[0].comp[c] * scale * (-(t1 - centroid) * mu).exp();
            } else {
                // Rectangle with right-node data, exact semigroup factor.
                for (int c = 0; c < d; ++c) acc[c] = fhat[0].comp[c] * dt * (mu * dt).unaryExpr(&g1);
            }
        } else {
            const Eigen::ArrayXd decay = (-dt * mu).exp();
            Eigen::ArrayXd wl(g.size()), wr(g.size());
            for (Eigen::Index i = 0; i < g.size(); ++i) cell_weights(mu[i], dt, wl[i], wr[i]);
            for (int c = 0; c < d; ++c)
                acc[c] = acc[c] * decay + fhat[k - 1].comp[c] * wl + fhat[k].comp[c] * wr;
        }
        SpectralField s(g, d);
        for (int c = 0; c < d; ++c) s.comp[c] = acc[c];
        out.slices[k] = inverse_transform(s);
    }
    return out;
}

SpaceTimeVectorField duhamel_bilinear_term(const SpaceTimeVectorField& u, const VectorField& u0,
                                           double alpha) {
    const SpaceGrid& g = u.sgrid;
    const TimeGrid& tg = u.tgrid;
    const int d = g.d;
    const Eigen::ArrayXd mu = semigroup_exponents(g, alpha);

    SpectralField h_prev = projected_advection(u0);  // s = 0 data
    SpaceTimeVectorField out(g, tg, d);
    std::vector<Eigen::ArrayXcd> acc(d, Eigen::ArrayXcd::Zero(g.size()));
    for (int k = 0; k < tg.N; ++k) {
        const SpectralField h_k = projected_advection(u.slices[k]);
        const double dt = tg.cell_width(k);
        const Eigen::ArrayXd decay = (-dt * mu).exp();
        Eigen::ArrayXd wl(g.size()), wr(g.size());
        for (Eigen::Index i = 0; i < g.size(); ++i) cell_weights(mu[i], dt, wl[i], wr[i]);
        for (int c = 0; c < d; ++c)
            acc[c] = acc[c] * decay + h_prev.comp[c] * wl + h_k.comp[c] * wr;
        SpectralField s(g, d);
        for (int c = 0; c < d; ++c) s.comp[c] = acc[c];
        out.slices[k] = inverse_transform(s);
        h_prev = h_k;
    }
    return out;
}

namespace {

double solve_norm(const SpaceTimeVectorField& u, double alpha, const SolveConfig& cfg) {
    if (cfg.norm_choice == SolveConfig::Norm::LinftyAlpha) return linfty_alpha_norm(u, alpha).value;
    const int d = u.sgrid.d;
    return parabolic_morrey_norm(u, alpha, cfg.morrey_p1, (d + alpha) / (alpha - 1.0), cfg.scan).value;
}

}  // namespace

SolveReport picard_solve(const VectorField& u0, const SpaceTimeVectorField* f, double alpha,
                         const SolveConfig& cfg) {
    if (cfg.max_iters < 1 || !(cfg.stop_tol > 0.0))
        throw std::invalid_argument("picard_solve: invalid SolveConfig");
    SolveReport rep;
    const TimeGrid tg = f ? f->tgrid : TimeGrid::graded(1.0, 32);
    SpaceTimeVectorField data = heat_term(u0, tg, alpha, cfg.div_tol);
    if (f) data = data + duhamel_force_term(*f, alpha);

    SpaceTimeVectorField u = data;
    const double data_norm = solve_norm(data, alpha, cfg);
    rep.iterate_norms.push_back(data_norm);
    double prev_diff = -1.0;

    for (int m = 0; m < cfg.max_iters; ++m) {
        const SpaceTimeVectorField b = duhamel_bilinear_term(u, u0, alpha);
        const SpaceTimeVectorField next = data - b;
        const double diff = solve_norm(next - u, alpha, cfg);
        const double nn = solve_norm(next, alpha, cfg);
        rep.iterate_norms.push_back(nn);
        if (prev_diff > 0.0) rep.contraction_factors.push_back(diff / prev_diff);
        prev_diff = diff;
        u = next;
        rep.iterations = m + 1;
        if (nn > cfg.divergence_guard * std::max(data_norm, 1e-300)) {
            rep.diverged = true;
            break;
        }
        if (diff <= cfg.stop_tol * std::max(nn, 1e-300)) {
            rep.converged = true;
            break;
        }
    }
    // Fixed-point residual ||u - (data - B(u,u))||, relative to ||u|| in the
    // chosen norm (stop_tol is relative, so the residual is too).
    const SpaceTimeVectorField residual_field = u - (data - duhamel_bilinear_term(u, u0, alpha));
    const double unorm = solve_norm(u, alpha, cfg);
    rep.residual = solve_norm(residual_field, alpha, cfg) / std::max(unorm, 1e-300);
    if (unorm == 0.0) rep.residual = 0.0;
    rep.final = std::move(u);
    return rep;
}

SpaceTimeVectorField recover_pressure(const SpaceTimeVectorField& u, const SpaceTimeVectorField* f) {
    const SpaceGrid& g = u.sgrid;
    const int d = g.d;
    SpaceTimeVectorField p(g, u.tgrid, 1);
    const std::complex<double> I(0.0, 1.0);
    for (int k = 0; k < u.tgrid.N; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) pairs.push_back({a, b});
        VectorField tensor(g, static_cast<int>(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            tensor.comp[i] = u.slices[k].comp[pairs[i].first] * u.slices[k].comp[pairs[i].second];
        const SpectralField that = forward_transform(tensor);
        const SpectralField fhat = f ? forward_transform(f->slices[k]) : SpectralField(g, d);

        SpectralField phat(g, 1);
        for (Eigen::Index idx = 0; idx < g.size(); ++idx) {
            auto j = g.unflatten(idx);
            std::array<double, 3> xi{0.0, 0.0, 0.0};
            double norm2 = 0.0;
            for (int a = 0; a < d; ++a) {
                xi[a] = g.xi(j[a], /*zero_nyquist=*/true);
                norm2 += xi[a] * xi[a];
            }
            if (norm2 == 0.0) continue;  // zero-mean gauge
            std::complex<double> quad(0.0, 0.0);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto [a, b] = pairs[i];
                const double factor = a == b ? 1.0 : 2.0;
                quad += factor * xi[a] * xi[b] * that.comp[i][idx];
            }
            std::complex<double> fdiv(0.0, 0.0);
            if (f)
                for (int a = 0; a < d; ++a) fdiv += I * xi[a] * fhat.comp[a][idx];
            phat.comp[0][idx] = -(quad + fdiv) / norm2;
        }
        p.slices[k] = inverse_transform(phat);
    }
    return p;
}

double duhamel_time_integral(double a, double b, double t) {
    if (!(a < 1.0) || !(b < 1.0))
        throw std::domain_error("duhamel_time_integral: divergent (needs a < 1 and b < 1)");
    if (!(t > 0.0)) throw std::domain_error("duhamel_time_integral: t must be positive");
    const double logB = std::lgamma(1.0 - a) + std::lgamma(1.0 - b) - std::lgamma(2.0 - a - b);
    return std::pow(t, 1.0 - a - b) * std::exp(logB);
}

}  // namespace fracns
