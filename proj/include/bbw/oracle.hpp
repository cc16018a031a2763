#pragma once

// Brute-force reference computations, independent of the LR tableau rule:
// Schur polynomials as sums over semistandard tableaux, monomial products,
// and greedy decomposition back into Schur polynomials.

#include <map>
#include <stdexcept>
#include <vector>

#include "bbw/bott.hpp"
#include "bbw/weights.hpp"

namespace bbw::oracle {

/// Dense exponent vector -> coefficient.
using Polynomial = std::map<std::vector<Entry>, BigInt>;

/// s_lambda(x_1, ..., x_m) by enumerating semistandard Young tableaux.
inline Polynomial schur_poly(const Partition& lambda, std::size_t vars) {
    if (lambda.rows() > vars) return {};
    std::vector<std::vector<Entry>> tableau;
    for (std::size_t r = 0; r < lambda.rows(); ++r) tableau.emplace_back(lambda[r], 0);
    Polynomial out;
    std::vector<Entry> exponent(vars, 0);
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == tableau.size()) {
            out[exponent] += 1;
            return;
        }
        if (c == tableau[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        Entry lo = 1;
        if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
        if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
        for (Entry v = lo; v <= static_cast<Entry>(vars); ++v) {
            tableau[r][c] = v;
            ++exponent[v - 1];
            self(self, r, c + 1);
            --exponent[v - 1];
        }
    };
    fill(fill, 0, 0);
    return out;
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<Entry> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    return out;
}

/// Decompose a symmetric polynomial with non-negative exponents into Schur
/// polynomials by repeatedly peeling off the lexicographically leading term.
inline std::map<Weight, BigInt> decompose(Polynomial p, std::size_t vars) {
    std::map<Weight, BigInt> out;
    for (;;) {
        std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
        if (p.empty()) break;
        const auto lead = std::prev(p.end());
        const Weight key(lead->first);
        const BigInt coeff = lead->second;
        if (!is_non_increasing(key) || coeff < 0)
            throw std::logic_error("polynomial is not a non-negative Schur combination");
        out[key] += coeff;
        for (const auto& [e, c] : schur_poly(Partition::from_weight(key), vars)) p[e] -= coeff * c;
    }
    return out;
}

/// LR coefficients by expanding s_lambda * s_mu monomially and decomposing.
inline std::map<Weight, BigInt> lr_by_polynomials(const Partition& lambda, const Partition& mu, std::size_t vars) {
    return decompose(multiply(schur_poly(lambda, vars), schur_poly(mu, vars)), vars);
}

}  // namespace bbw::oracle
