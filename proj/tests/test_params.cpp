#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fracns/params.hpp"
#include "fracns/random_fields.hpp"

using namespace fracns;

namespace {
ModelParams base_params() { return {Rat(3, 2), 3}; }
}  // namespace

TEST_CASE("rational parsing and arithmetic are exact") {
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("2.9") == Rat(29, 10));
    CHECK(Rat::parse("1.4") == Rat(7, 5));
    CHECK(Rat::parse("-0.25") == Rat(-1, 4));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(29, 10) * Rat(1, 2) / Rat(3, 5) == Rat(29, 12));
    CHECK(Rat::from_double(0.4) == Rat(2, 5));
    CHECK(Rat::from_double(4.0 / 9.0) == Rat(4, 9));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("theorem-1 indices: rho derivation and range checks") {
    const ModelParams mp = base_params();

    auto t1 = derive_thm1_indices(mp, ExtendedIndex::finite(Rat(3)), Rat(1, 3));
    CHECK(t1.admissible);
    CHECK(t1.rho == Rat(4, 9));

    // p0 on the d/alpha boundary is rejected (strict inequality).
    auto bad = derive_thm1_indices(mp, ExtendedIndex::finite(Rat(2)), Rat(1, 3));
    CHECK_FALSE(bad.admissible);
    REQUIRE(bad.violations.size() >= 1);
    CHECK(bad.violations.front().condition == "p0 > d/alpha");
    CHECK(bad.violations.front().slack == doctest::Approx(0.0));

    // p0 = infinity branch: d/p0 = 0, rho = 2 - (beta+1)/alpha.
    auto inf = derive_thm1_indices(mp, ExtendedIndex::inf(), Rat(1));
    CHECK(inf.admissible);
    CHECK(inf.rho == Rat(2, 3));

    // beta outside the open interval, slack reported.
    auto high = derive_thm1_indices(mp, ExtendedIndex::finite(Rat(3)), Rat(1, 2));
    CHECK_FALSE(high.admissible);
    CHECK(high.violations.front().condition == "beta < alpha - d/p0");
}

TEST_CASE("theorem-2 indices: frak_p, frak_q, q1") {
    const ModelParams mp = base_params();

    auto a = derive_thm2_indices(mp, Rat(29, 10), Rat(7, 5));
    CHECK(a.admissible);
    CHECK(a.frak_p == Rat(29, 12));
    CHECK(a.frak_q == Rat(15, 2));
    CHECK(a.q1 == Rat(9));

    auto b = derive_thm2_indices(mp, Rat(5, 2), Rat(7, 5));
    CHECK(b.admissible);
    CHECK(b.frak_p == Rat(25, 12));
    CHECK(b.frak_q == Rat(15, 2));

    auto boundary = derive_thm2_indices(mp, Rat(2), Rat(7, 5));
    CHECK_FALSE(boundary.admissible);
    CHECK(boundary.violations.front().condition == "p1 > 2");
    CHECK(boundary.violations.front().slack == doctest::Approx(0.0));
    // The p1 = 2 discussion-level discrepancy is surfaced as a warning.
    bool warned = false;
    for (const auto& w : boundary.warnings) warned |= w.find("p1 = 2") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("embedding F -> W (section-6 lemma)") {
    const ModelParams mp = base_params();
    auto t1 = derive_thm1_indices(mp, ExtendedIndex::finite(Rat(3)), Rat(1, 3));
    auto t2 = derive_thm2_indices(mp, Rat(29, 10), Rat(7, 5));

    // Counterexample-A parameters: rho*fp = (4/9)(29/12) = 29/27 > 1, beta != gamma.
    auto v = check_embedding_F_to_W(t1, t2);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violated_conditions.size() == 2);
    CHECK(v.violated_conditions[0].condition == "rho * frak_p < 1");
    CHECK(v.violated_conditions[0].slack == doctest::Approx((Rat(29, 27) - Rat(1)).value()));

    // All conditions satisfied by construction: beta = gamma, small rho*fp.
    auto t1b = derive_thm1_indices(mp, ExtendedIndex::finite(Rat(3)), Rat(1, 3));
    Thm2Indices t2b = t2;
    t2b.gamma = t1b.beta;
    t2b.frak_p = Rat(2);
    CHECK(t1b.rho * t2b.frak_p < Rat(1));
    CHECK(check_embedding_F_to_W(t1b, t2b).holds);

    // rho * fp = 0.4 * 2.6 = 1.04 > 1.
    Thm2Indices t2c = t2b;
    t2c.frak_p = Rat(26, 10);
    Thm1Indices t1c = t1b;
    t1c.rho = Rat(2, 5);
    auto vc = check_embedding_F_to_W(t1c, t2c);
    CHECK_FALSE(vc.holds);
    CHECK(vc.violated_conditions.front().slack == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("embedding W -> V_alpha^{-1} (gamma = 1 lemma)") {
    const ModelParams mp = base_params();

    auto ok = derive_thm2_indices(mp, Rat(5, 2), Rat(1));
    REQUIRE(ok.admissible);
    CHECK(ok.frak_p == Rat(5, 4));
    CHECK(ok.frak_q == Rat(9, 2));
    CHECK(check_embedding_W_to_Vinv(mp, ok).holds);

    auto no = derive_thm2_indices(mp, Rat(5, 2), Rat(7, 5));
    CHECK_FALSE(check_embedding_W_to_Vinv(mp, no).holds);

    auto ok2 = derive_thm2_indices(mp, Rat(29, 10), Rat(1));
    CHECK(check_embedding_W_to_Vinv(mp, ok2).holds);
}

TEST_CASE("admissible random draws satisfy the derived-index invariants") {
    Rng rng(20260809u);
    int checked1 = 0, checked2 = 0;
    for (int trial = 0; trial < 12000 && (checked1 < 1000 || checked2 < 1000); ++trial) {
        // Random d in {3,4,5} and rational alpha in [d/(d-1), 2): the regime
        // where frak_q > p1 is a theorem (it can fail for alpha close to 1
        // relative to d, e.g. d = 2 with any alpha < 2).
        const int dim = 3 + static_cast<int>(rng.next_u64() % 3);
        const Rat alpha_lo = Rat(dim, dim - 1);
        const Rat alpha =
            alpha_lo + (Rat(2) - alpha_lo) * Rat(static_cast<int>(rng.next_u64() % 999), 1000);
        const ModelParams mp{alpha, dim};

        if (checked1 < 1000) {
            const Rat p0 = Rat(mp.dim) / mp.alpha + Rat(1 + static_cast<int>(rng.next_u64() % 4000), 1000);
            const Rat lo = mp.alpha - Rat(mp.dim) / p0 - Rat(1);
            const Rat width = Rat(1);  // interval (lo, lo+1) has length exactly 1
            const Rat beta = lo + width * Rat(1 + static_cast<int>(rng.next_u64() % 998), 1000);
            auto t1 = derive_thm1_indices(mp, ExtendedIndex::finite(p0), beta);
            if (t1.admissible) {
                ++checked1;
                CHECK(Rat(0) < t1.rho);
                CHECK(t1.rho < Rat(1));
            }
        }
        if (checked2 < 1000) {
            const Rat cap = mp.alpha / (mp.alpha - Rat(1));
            const Rat p1 = Rat(2) + (cap - Rat(2)) * Rat(1 + static_cast<int>(rng.next_u64() % 998), 1000);
            const Rat glo = Rat(2) * mp.alpha - Rat(1) - (mp.alpha - Rat(1)) * p1;
            const Rat gbase = glo > Rat(0) ? glo : Rat(0);
            const Rat gamma =
                gbase + (mp.alpha - gbase) * Rat(1 + static_cast<int>(rng.next_u64() % 998), 1000);
            auto t2 = derive_thm2_indices(mp, p1, gamma);
            if (t2.admissible) {
                ++checked2;
                CHECK(Rat(1) < t2.frak_p);
                CHECK(t2.frak_p <= t2.p1);
                CHECK(t2.p1 < t2.frak_q);
                // Criticality of the W-space under the force scaling, exactly.
                CHECK(wspace_scaling_exponent(t2) == Rat(0));
            }
        }
    }
    CHECK(checked1 >= 1000);
    CHECK(checked2 >= 1000);
}

TEST_CASE("determinism: identical inputs give identical outputs") {
    const ModelParams mp = base_params();
    auto a = derive_thm2_indices(mp, Rat(29, 10), Rat(7, 5));
    auto b = derive_thm2_indices(mp, Rat(29, 10), Rat(7, 5));
    CHECK(a.frak_p == b.frak_p);
    CHECK(a.frak_q == b.frak_q);
    CHECK(a.admissible == b.admissible);
    CHECK(a.violations.size() == b.violations.size());
}
