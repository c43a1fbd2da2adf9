#include "fracns/params.hpp"

#include <cmath>

namespace fracns {
namespace {

// Strict lower bound lo < x; slack 0 on the boundary.
void require_gt(std::vector<Violation>& out, const std::string& name, const Rat& x, const Rat& lo) {
    if (!(lo < x)) out.push_back({name, (lo - x).value()});
}

void require_lt(std::vector<Violation>& out, const std::string& name, const Rat& x, const Rat& hi) {
    if (!(x < hi)) out.push_back({name, (x - hi).value()});
}

void check_params(std::vector<Violation>& out, const ModelParams& p) {
    require_gt(out, "alpha > 1", p.alpha, Rat(1));
    require_lt(out, "alpha < 2", p.alpha, Rat(2));
    if (p.dim < 1) out.push_back({"d >= 1", static_cast<double>(1 - p.dim)});
}

void dimension_warnings(std::vector<std::string>& warnings, const ModelParams& p) {
    if (p.dim == 2) warnings.push_back("d = 2 is paper-marginal (stated d >= 3, admissible per the p0 > 1 remark)");
    if (p.dim == 1) warnings.push_back("d = 1 is outside the theorem scope (kernel tooling only)");
}

}  // namespace

Thm1Indices derive_thm1_indices(const ModelParams& params, const ExtendedIndex& p0, const Rat& beta) {
    Thm1Indices out;
    out.params = params;
    out.p0 = p0;
    out.beta = beta;
    check_params(out.violations, params);
    dimension_warnings(out.warnings, params);

    const Rat d_over_alpha = Rat(params.dim) / params.alpha;
    Rat d_over_p0(0);
    if (p0.infinite) {
        out.warnings.push_back("p0 = inf requires div(f) = 0");
    } else {
        require_gt(out.violations, "p0 > d/alpha", p0.value, d_over_alpha);
        if (p0.value.num() > 0) d_over_p0 = Rat(params.dim) / p0.value;
    }
    const Rat beta_lo = params.alpha - d_over_p0 - Rat(1);
    const Rat beta_hi = params.alpha - d_over_p0;
    require_gt(out.violations, "beta > alpha - d/p0 - 1", beta, beta_lo);
    require_lt(out.violations, "beta < alpha - d/p0", beta, beta_hi);
    require_gt(out.violations, "beta > 0", beta, Rat(0));

    out.rho = Rat(2) - (beta + d_over_p0 + Rat(1)) / params.alpha;
    out.admissible = out.violations.empty();
    return out;
}

Thm2Indices derive_thm2_indices(const ModelParams& params, const Rat& p1, const Rat& gamma) {
    Thm2Indices out;
    out.params = params;
    out.p1 = p1;
    out.gamma = gamma;
    check_params(out.violations, params);
    dimension_warnings(out.warnings, params);

    const Rat am1 = params.alpha - Rat(1);
    require_gt(out.violations, "p1 > 2", p1, Rat(2));
    require_lt(out.violations, "p1 < alpha/(alpha-1)", p1, params.alpha / am1);
    if (p1 == Rat(2))
        out.warnings.push_back("p1 = 2 is the discussion-level boundary; the strict form 2 < p1 is enforced");

    const Rat gamma_lo = Rat(2) * params.alpha - Rat(1) - am1 * p1;
    require_gt(out.violations, "gamma > 2*alpha - 1 - (alpha-1)*p1", gamma, gamma_lo);
    require_lt(out.violations, "gamma < alpha", gamma, params.alpha);

    const Rat denom = Rat(2) * params.alpha - Rat(1) - gamma;
    const Rat d_plus_alpha = Rat(params.dim) + params.alpha;
    if (denom > Rat(0)) {
        out.frak_p = am1 * p1 / denom;
        out.frak_q = d_plus_alpha / denom;
    } else {
        out.violations.push_back({"2*alpha - 1 - gamma > 0", (Rat(0) - denom).value()});
    }
    out.q1 = d_plus_alpha / am1;
    out.admissible = out.violations.empty();
    return out;
}

EmbeddingVerdict check_embedding_F_to_W(const Thm1Indices& t1, const Thm2Indices& t2) {
    EmbeddingVerdict v;
    const Rat rho_fp = t1.rho * t2.frak_p;
    if (!(rho_fp < Rat(1)))
        v.violated_conditions.push_back({"rho * frak_p < 1", (rho_fp - Rat(1)).value()});
    if (!t1.p0.infinite && !(t2.frak_p <= t1.p0.value))
        v.violated_conditions.push_back({"frak_p <= p0", (t2.frak_p - t1.p0.value).value()});
    if (t1.beta != t2.gamma)
        v.violated_conditions.push_back({"beta = gamma", std::abs((t1.beta - t2.gamma).value())});
    v.holds = v.violated_conditions.empty();
    return v;
}

EmbeddingVerdict check_embedding_W_to_Vinv(const ModelParams& params, const Thm2Indices& t2) {
    EmbeddingVerdict v;
    if (params.dim < 2)
        v.violated_conditions.push_back({"d >= 2", static_cast<double>(2 - params.dim)});
    if (t2.gamma != Rat(1)) {
        v.violated_conditions.push_back({"gamma = 1", std::abs((t2.gamma - Rat(1)).value())});
    } else {
        // gamma = 1 forces these; re-derive in exact arithmetic as a guard.
        const Rat fp_expected = t2.p1 / Rat(2);
        const Rat fq_expected = (Rat(params.dim) + params.alpha) / (Rat(2) * params.alpha - Rat(2));
        if (t2.frak_p != fp_expected)
            v.violated_conditions.push_back({"frak_p = p1/2", std::abs((t2.frak_p - fp_expected).value())});
        if (t2.frak_q != fq_expected)
            v.violated_conditions.push_back({"frak_q = (d+alpha)/(2*alpha-2)", std::abs((t2.frak_q - fq_expected).value())});
    }
    v.holds = v.violated_conditions.empty();
    return v;
}

Rat wspace_scaling_exponent(const Thm2Indices& t2) {
    // Under f_lambda = lambda^{2a-1} f(lambda^a t, lambda x) the W-norm picks
    // up lambda^{(2a-1) - gamma - (d+a)/fq}.
    return Rat(2) * t2.params.alpha - Rat(1) - t2.gamma -
           (Rat(t2.params.dim) + t2.params.alpha) / t2.frak_q;
}

}  // namespace fracns
