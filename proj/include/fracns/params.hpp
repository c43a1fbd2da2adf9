#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracns/rational.hpp"

namespace fracns {

/// One failed admissibility condition, with how far the input sits on the
/// wrong side of (or exactly on) the boundary.
struct Violation {
    std::string condition;
    double slack = 0.0;  // >= 0; 0 means exactly on an excluded boundary
};

/// Fixed physical parameters: fractional dissipation exponent and dimension.
struct ModelParams {
    Rat alpha;
    int dim = 3;

    bool valid() const { return Rat(1) < alpha && alpha < Rat(2) && dim >= 1; }
};

/// Lebesgue index that may be +infinity, kept distinct from any float.
struct ExtendedIndex {
    bool infinite = false;
    Rat value;  // meaningful only when !infinite

    static ExtendedIndex inf() { return {true, Rat(0)}; }
    static ExtendedIndex finite(Rat v) { return {false, v}; }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

/// Index bundle for the weighted-Lebesgue force space F^{-beta,p0}_rho and
/// the L^infty_alpha resolution space. rho is derived:
/// rho = 2 - (beta + d/p0 + 1)/alpha, with d/p0 = 0 when p0 = inf.
struct Thm1Indices {
    ModelParams params;
    ExtendedIndex p0;
    Rat beta;
    Rat rho;
    bool admissible = false;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
};

/// Index bundle for the Morrey resolution space M^{p1,(d+alpha)/(alpha-1)}
/// and the Morrey-Sobolev force space W^{-gamma,fp,fq}:
/// fp = (alpha-1) p1 / (2 alpha - 1 - gamma), fq = (d+alpha)/(2 alpha - 1 - gamma).
struct Thm2Indices {
    ModelParams params;
    Rat p1;
    Rat gamma;
    Rat frak_p;
    Rat frak_q;
    Rat q1;  // second Morrey index of the resolution space, (d+alpha)/(alpha-1)
    bool admissible = false;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
};

struct EmbeddingVerdict {
    bool holds = false;
    std::vector<Violation> violated_conditions;
};

/// Evaluates the Theorem-1 index ranges d/alpha < p0 <= inf and
/// alpha - d/p0 - 1 < beta < alpha - d/p0 (beta > 0 as well), and derives rho.
/// Inadmissible inputs come back flagged, never thrown.
Thm1Indices derive_thm1_indices(const ModelParams& params, const ExtendedIndex& p0, const Rat& beta);

/// Evaluates the Theorem-2 ranges 2 < p1 < alpha/(alpha-1) and
/// 2 alpha - 1 - (alpha-1) p1 < gamma < alpha, and derives fp, fq, q1.
Thm2Indices derive_thm2_indices(const ModelParams& params, const Rat& p1, const Rat& gamma);

/// Embedding F^{-beta,p0}_rho into W^{-gamma,fp,fq}: requires rho*fp < 1,
/// fp <= p0 and beta = gamma.
EmbeddingVerdict check_embedding_F_to_W(const Thm1Indices& t1, const Thm2Indices& t2);

/// Embedding W^{-gamma,fp,fq} into V_alpha^{-1}: requires gamma = 1 (the
/// derived fp = p1/2 and fq = (d+alpha)/(2 alpha - 2) are re-checked in exact
/// arithmetic) and d >= 2.
EmbeddingVerdict check_embedding_W_to_Vinv(const ModelParams& params, const Thm2Indices& t2);

/// Scaling exponent of the W^{-gamma,fp,fq} norm under the force rescaling
/// f_lambda = lambda^{2 alpha - 1} f(lambda^alpha t, lambda x); identically
/// zero for indices derived by derive_thm2_indices.
Rat wspace_scaling_exponent(const Thm2Indices& t2);

}  // namespace fracns
