#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracns/descriptor.hpp"
#include "fracns/random_fields.hpp"
#include "fracns/transform.hpp"

using namespace fracns;

TEST_CASE("graded time grid") {
    const TimeGrid tg = TimeGrid::graded(4.0, 64, 2.0);
    CHECK(tg.node(63) == doctest::Approx(4.0));
    CHECK(tg.node(0) == doctest::Approx(4.0 / (64.0 * 64.0)));
    for (int k = 1; k < tg.N; ++k) CHECK(tg.node(k) > tg.node(k - 1));
    double total = 0.0;
    for (int k = 0; k < tg.N; ++k) total += tg.cell_width(k);
    CHECK(total == doctest::Approx(4.0));
    CHECK_THROWS(TimeGrid::graded(-1.0, 8));
}

TEST_CASE("forward/inverse round trip and Parseval on white noise") {
    for (int d : {1, 2, 3}) {
        const SpaceGrid g(d, 16, M_PI);
        VectorField u(g, d);
        Rng rng(42u + d);
        for (int c = 0; c < d; ++c)
            for (Eigen::Index i = 0; i < g.size(); ++i) u.comp[c][i] = rng.normal();

        const SpectralField spec = forward_transform(u);
        CHECK(hermitian_defect(spec) < 1e-12 * spec.max_abs());

        const VectorField back = inverse_transform(spec);
        double err = 0.0;
        for (int c = 0; c < d; ++c) err = std::max(err, (back.comp[c] - u.comp[c]).abs().maxCoeff());
        CHECK(err < 1e-12 * u.max_abs());

        CHECK(l2_norm_spectral(spec) == doctest::Approx(l2_norm_grid(u)).epsilon(1e-12));
    }
}

TEST_CASE("zero field transforms to zero spectrum") {
    const SpaceGrid g(2, 8, 1.0);
    const VectorField zero(g, 2);
    CHECK(forward_transform(zero).max_abs() == 0.0);
}

TEST_CASE("non-finite samples are rejected") {
    const SpaceGrid g(1, 8, 1.0);
    VectorField u(g, 1);
    u.comp[0][3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS(forward_transform(u));
}

TEST_CASE("pure cosine mode lands on k = +-1 with weight 1/2") {
    const SpaceGrid g(3, 8, 2.0);  // frequency pi/L = pi/2
    VectorField u(g, 3);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto j = g.unflatten(i);
        u.comp[1][i] = std::cos(M_PI / g.L * g.coord(j[0]));
    }
    const SpectralField spec = forward_transform(u);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto j = g.unflatten(i);
        const int k0 = g.wavenumber(j[0]);
        const bool carrier = (std::abs(k0) == 1 && j[1] == 0 && j[2] == 0);
        if (carrier) {
            CHECK(std::abs(spec.comp[1][i] - std::complex<double>(0.5, 0.0)) < 1e-13);
        } else {
            CHECK(std::abs(spec.comp[1][i]) < 1e-13);
        }
        CHECK(std::abs(spec.comp[0][i]) < 1e-14);
    }
}

TEST_CASE("band-limited descriptor sampling is spectrally exact") {
    const SpaceGrid g(3, 16, M_PI);
    const auto desc = descriptors::fourier_mode({2, 1, 0}, {0.0, 0.0, 1.0});
    const SpectralField spec = forward_transform(desc.sample(g));
    // cos(2x+y) splits into two conjugate coefficients of 1/2.
    double offmass = 0.0;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto j = g.unflatten(i);
        const bool carrier = (std::abs(g.wavenumber(j[0])) == 2 &&
                              g.wavenumber(j[1]) == (g.wavenumber(j[0]) > 0 ? 1 : -1) && j[2] == 0);
        if (carrier)
            CHECK(std::abs(spec.comp[2][i] - std::complex<double>(0.5, 0.0)) < 1e-13);
        else
            offmass = std::max(offmass, std::abs(spec.comp[2][i]));
    }
    CHECK(offmass < 1e-13);
}

TEST_CASE("divergence operator and divergence-free checks") {
    const SpaceGrid g(3, 8, M_PI);

    // Gradient of a bump is not divergence-free (div grad = Laplacian != 0).
    VectorField bump(g, 1);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto j = g.unflatten(i);
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) r2 += g.coord(j[a]) * g.coord(j[a]);
        bump.comp[0][i] = std::exp(-2.0 * r2);
    }
    const SpectralField bhat = forward_transform(bump);
    SpectralField grad(g, 3);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        auto j = g.unflatten(i);
        for (int a = 0; a < 3; ++a)
            grad.comp[a][i] = std::complex<double>(0.0, g.xi(j[a], true)) * bhat.comp[0][i];
    }
    CHECK_FALSE(is_divergence_free(grad, 1e-8));

    // Curl-type single mode u = cos(xi1 x1) e2 has xi . uhat = 0 exactly.
    const auto mode = descriptors::fourier_mode({1, 0, 0}, {0.0, 1.0, 0.0});
    CHECK(is_divergence_free(forward_transform(mode.sample(g)), 1e-12));

    // Mode xi = (pi/L, 0, 0), uhat = (1,1,0): divergence entry i*pi/L at the carrier.
    SpectralField s(g, 3);
    std::array<int, 3> carrier{1, 0, 0};
    const Eigen::Index ci = g.flatten(carrier);
    s.comp[0][ci] = 1.0;
    s.comp[1][ci] = 1.0;
    const SpectralField div = divergence(s);
    CHECK(std::abs(div.comp[0][ci] - std::complex<double>(0.0, M_PI / g.L)) < 1e-14);
}

TEST_CASE("random divergence-free fields are reproducible and solenoidal") {
    const SpaceGrid g(3, 16, M_PI);
    const VectorField a = random_band_limited_field(g, 3, 7u, true, 0.5);
    const VectorField b = random_band_limited_field(g, 3, 7u, true, 0.5);
    for (int c = 0; c < 3; ++c) CHECK((a.comp[c] == b.comp[c]).all());
    CHECK(is_divergence_free(forward_transform(a), 1e-10));
    CHECK(a.max_abs() == doctest::Approx(0.5));
}

TEST_CASE("force descriptors evaluate their closed forms") {
    const SpaceGrid g(3, 16, M_PI);
    const TimeGrid tg = TimeGrid::graded(1.0, 8, 2.0);

    // Force B at t = 1/32, x = 0: 32^{2/5} * v0 = 4 * v0 exactly.
    const auto fb = descriptors::force_B();
    CHECK(fb.time_factor(1.0 / 32.0) == doctest::Approx(4.0).epsilon(1e-14));
    const VectorField profile = fb.sample(g);
    std::array<int, 3> origin{8, 8, 8};  // x = 0
    CHECK(profile.comp[1][g.flatten(origin)] == doctest::Approx(1.0));
    CHECK(profile.comp[0][g.flatten(origin)] == 0.0);

    // Force A at t = 1 equals its spatial profile exactly (t^-rho = 1).
    const auto fa = descriptors::force_A(4.0 / 9.0, g.L);
    const SpaceTimeVectorField ft = fa.sample(g, tg);
    int k1 = -1;
    for (int k = 0; k < tg.N; ++k)
        if (std::abs(tg.node(k) - 1.0) < 1e-12) k1 = k;
    REQUIRE(k1 >= 0);
    const VectorField pa = fa.sample(g);
    CHECK((ft.slices[k1].comp[0] - pa.comp[0]).abs().maxCoeff() < 1e-12 * pa.max_abs());

    // Mean-free: the sampled mean vanishes to spectral accuracy.
    CHECK(std::abs(pa.comp[0].mean()) < 1e-12 * pa.max_abs());
}
