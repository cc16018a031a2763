#pragma once

// Cohomology of Schur-functor bundles on the Grassmannian G(k, V), dim V = n.
//
// Conventions: U is the tautological rank-k subbundle, U^perp the dual of the
// quotient (rank n-k). Hom^i(A, B) = H^i(A^vee (x) B). Every bundle is
// normalized to Sigma^a U^vee (x) Sigma^b U^perp before the reduction to the
// full flag variety, where H^i(G, Sigma^a U^vee (x) Sigma^b U^perp) equals
// H^i(F(V), O(a_1..a_k, b_1..b_{n-k})).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbw/bott.hpp"
#include "bbw/schur.hpp"
#include "bbw/weights.hpp"

namespace bbw {

class GrassmannContext {
public:
    GrassmannContext(std::size_t k, std::size_t n) : k_(k), n_(n) {
        if (k < 1 || k >= n)
            throw std::invalid_argument("Grassmannian G(k,n) needs 1 <= k <= n-1, got k=" + std::to_string(k) +
                                        ", n=" + std::to_string(n));
    }
    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t quotient_rank() const noexcept { return n_ - k_; }
    /// dim G = k(n-k); also the bound on cohomological degrees.
    std::size_t dimension() const noexcept { return k_ * (n_ - k_); }
    /// Rows allowed in the Cauchy decomposition of Sym T_G.
    std::size_t cauchy_rows() const noexcept { return std::min(k_, n_ - k_); }

    friend bool operator==(const GrassmannContext&, const GrassmannContext&) = default;

private:
    std::size_t k_;
    std::size_t n_;
};

/// Sigma^u_dual U^vee (x) Sigma^uperp U^perp.
struct MixedBundle {
    Weight u_dual;  // length k
    Weight uperp;   // length n-k
};

inline Weight kapranov_reduce(const GrassmannContext& ctx, const MixedBundle& b) {
    if (b.u_dual.size() != ctx.k() || b.uperp.size() != ctx.quotient_rank())
        throw std::invalid_argument("mixed bundle weights have lengths " + std::to_string(b.u_dual.size()) + "+" +
                                    std::to_string(b.uperp.size()) + ", expected " + std::to_string(ctx.k()) + "+" +
                                    std::to_string(ctx.quotient_rank()));
    if (!is_non_increasing(b.u_dual) || !is_non_increasing(b.uperp))
        throw std::invalid_argument("kapranov_reduce needs non-increasing weights");
    return concat(b.u_dual, b.uperp);
}

/// One summand Sigma^lambda U^vee (x) Sigma^lambda (U^perp)^vee of Sym^d T_G.
struct CauchyTerm {
    Partition lambda;     // ambient length min(k, n-k)
    Weight u_dual;        // lambda padded to length k, a weight on U^vee
    Weight uperp_dual;    // lambda padded to length n-k, a weight on (U^perp)^vee
};

/// Sym^d(U^vee (x) (U^perp)^vee) = sum over |lambda| = d with at most
/// min(k, n-k) rows.
inline std::vector<CauchyTerm> sym_tangent_cauchy(const GrassmannContext& ctx, std::size_t degree) {
    std::vector<CauchyTerm> out;
    for (Partition& lambda : partitions_of(static_cast<Entry>(degree), ctx.cauchy_rows(), ctx.cauchy_rows())) {
        Weight u = lambda.with_length(ctx.k()).weight();
        Weight q = lambda.with_length(ctx.quotient_rank()).weight();
        out.push_back(CauchyTerm{std::move(lambda), std::move(u), std::move(q)});
    }
    return out;
}

/// Cohomological degree -> dimension, zeros omitted.
using DegreeMap = std::map<std::size_t, BigInt>;

/// An irreducible summand of a Cauchy piece and its flag-variety cohomology.
struct FlagSummand {
    Weight flag_weight;
    BigInt multiplicity;
    BottResult cohomology;
};

/// Contribution of one lambda to Hom^*_G(Sigma^alpha U, Sigma^beta U (x) Sym^d T_G).
struct LambdaPiece {
    Partition lambda;
    std::vector<FlagSummand> summands;
    DegreeMap h;
};

/// Per-lambda breakdown of Hom^*_G(Sigma^alpha U, Sigma^beta U (x) Sym^d T_G).
inline std::vector<LambdaPiece> hom_grassmann_pieces(const GrassmannContext& ctx, const Weight& alpha,
                                                     const Weight& beta, std::size_t degree) {
    if (alpha.size() != ctx.k() || beta.size() != ctx.k())
        throw std::invalid_argument("alpha and beta must have length k=" + std::to_string(ctx.k()));
    if (!is_non_increasing(alpha) || !is_non_increasing(beta))
        throw std::invalid_argument("alpha and beta must be non-increasing");
    // Sigma^alpha U^vee (x) Sigma^beta U, all on U^vee.
    const SchurExpansion base = tensor_weights(alpha, dual_weight(beta));
    std::vector<LambdaPiece> out;
    for (const CauchyTerm& term : sym_tangent_cauchy(ctx, degree)) {
        LambdaPiece piece{term.lambda, {}, {}};
        const Weight quotient = dual_weight(term.uperp_dual);
        for (const auto& [gamma, mult] : tensor_weights(base, term.u_dual)) {
            Weight flag = kapranov_reduce(ctx, MixedBundle{gamma, quotient});
            BottResult h = bott(flag);
            if (!h.is_vanishing()) piece.h[h.degree()] += mult * h.dimension();
            piece.summands.push_back(FlagSummand{std::move(flag), mult, std::move(h)});
        }
        out.push_back(std::move(piece));
    }
    return out;
}

/// Hom^i_G(Sigma^alpha U, Sigma^beta U (x) Sym^d T_G) for all i.
inline DegreeMap hom_grassmann(const GrassmannContext& ctx, const Weight& alpha, const Weight& beta,
                               std::size_t degree) {
    DegreeMap total;
    for (const LambdaPiece& piece : hom_grassmann_pieces(ctx, alpha, beta, degree))
        for (const auto& [i, dim] : piece.h) total[i] += dim;
    return total;
}

}  // namespace bbw
