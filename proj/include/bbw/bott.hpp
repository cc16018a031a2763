#pragma once

// Cohomology of line bundles O(Delta) on the full flag variety F(V) of
// GL(V), dim V = m, by the Bott algorithm.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bbw/weights.hpp"

namespace bbw {

using BigInt = boost::multiprecision::cpp_int;

/// Either total vanishing, or cohomology concentrated in one degree and
/// isomorphic there to the irreducible GL(m) module of a dominant weight.
class BottResult {
public:
    static BottResult vanishes() { return BottResult(); }
    static BottResult concentrated(std::size_t degree, Weight dominant, BigInt dimension) {
        if (!is_non_increasing(dominant)) throw std::invalid_argument("dominant weight must be non-increasing");
        if (dimension < 1) throw std::invalid_argument("concentrated cohomology must have dimension >= 1");
        BottResult r;
        r.value_ = Concentrated{degree, std::move(dominant), std::move(dimension)};
        return r;
    }

    bool is_vanishing() const noexcept { return !value_.has_value(); }
    std::size_t degree() const { return checked().degree; }
    const Weight& dominant() const { return checked().dominant; }
    const BigInt& dimension() const { return checked().dimension; }

    /// h^i for any i.
    BigInt h(std::size_t i) const {
        if (is_vanishing() || value_->degree != i) return 0;
        return value_->dimension;
    }

    /// Sum (-1)^i h^i.
    BigInt signed_dimension() const {
        if (is_vanishing()) return 0;
        return value_->degree % 2 == 0 ? value_->dimension : BigInt(-value_->dimension);
    }

    friend bool operator==(const BottResult& a, const BottResult& b) {
        if (a.is_vanishing() || b.is_vanishing()) return a.is_vanishing() == b.is_vanishing();
        return a.value_->degree == b.value_->degree && a.value_->dominant == b.value_->dominant &&
               a.value_->dimension == b.value_->dimension;
    }

private:
    struct Concentrated {
        std::size_t degree;
        Weight dominant;
        BigInt dimension;
    };
    const Concentrated& checked() const {
        if (!value_) throw std::logic_error("cohomology vanishes; no degree or dominant weight");
        return *value_;
    }
    std::optional<Concentrated> value_;
};

/// The signed Weyl product prod_{i<j} (w_i - w_j + j - i) / (j - i).
/// For dominant w this is the dimension of Sigma^w; for arbitrary w it is the
/// Euler characteristic of O(w) on F(V).
inline BigInt weyl_product(const Weight& w) {
    const std::size_t m = w.size();
    BigInt numerator = 1;
    BigInt denominator = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            numerator *= BigInt(w[i]) - BigInt(w[j]) + static_cast<long long>(j - i);
            denominator *= static_cast<long long>(j - i);
        }
    }
    assert(numerator % denominator == 0);
    return numerator / denominator;
}

/// Dimension of the irreducible GL(m) module of a non-increasing weight.
inline BigInt weyl_dim(const Weight& dominant) {
    if (!is_non_increasing(dominant)) throw std::invalid_argument("weyl_dim needs a non-increasing weight, got " + dominant.to_string());
    return weyl_product(dominant);
}

/// sum_i (-1)^i h^i(F(V), O(w)).
inline BigInt euler_characteristic(const Weight& w) { return weyl_product(w); }

/// Number of tilde-transpositions any sorting walk of w performs: the
/// inversion count of w + rho. Meaningful only if w + rho has distinct entries.
inline std::size_t bott_length(const Weight& w) {
    const Weight shifted = add(w, rho(w.size()));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < shifted.size(); ++i)
        for (std::size_t j = i + 1; j < shifted.size(); ++j)
            if (shifted[i] < shifted[j]) ++inversions;
    return inversions;
}

/// Literal replay of the Bott walk: apply the tilde action of adjacent
/// transpositions at ascents until the weight is non-increasing, stopping
/// with vanishing as soon as an ascent d_{l+1} = d_l + 1 (a fixed point) appears.
inline BottResult bott_walk(const Weight& w) {
    Weight current = w;
    std::size_t steps = 0;
    for (;;) {
        std::size_t ascent = 0;
        for (std::size_t l = 1; l < current.size(); ++l) {
            if (current[l] == current[l - 1] + 1) return BottResult::vanishes();
            if (ascent == 0 && current[l] > current[l - 1]) ascent = l;
        }
        if (ascent == 0) break;
        current = tilde_transpose(current, ascent);
        ++steps;
    }
    BigInt dim = weyl_dim(current);
    return BottResult::concentrated(steps, std::move(current), std::move(dim));
}

/// H^*(F(V), O(w)) via sorting w + rho. Repeated entries mean vanishing;
/// otherwise the degree is the inversion count and the dominant weight is
/// sort_desc(w + rho) - rho.
inline BottResult bott(const Weight& w) {
    const Weight r = rho(w.size());
    std::vector<Entry> shifted = add(w, r).vec();
    std::vector<Entry> sorted = shifted;
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    BottResult result = BottResult::vanishes();
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        Weight dominant = subtract(Weight(std::move(sorted)), r);
        BigInt dim = weyl_product(dominant);
        result = BottResult::concentrated(bott_length(w), std::move(dominant), std::move(dim));
    }
#ifdef BBW_BOTT_REPLAY
    if (!(bott_walk(w) == result))
        throw std::logic_error("Bott walk replay disagrees with the sorted route on " + w.to_string());
#endif
    return result;
}

/// (h^0, h^1) of O(d) on P^1 by counting Cech monomials: x^a y^b with
/// a, b >= 0 and a + b = d for h^0; x^a y^b with a, b <= -1 and a + b = d for h^1.
inline std::pair<BigInt, BigInt> cech_p1_oracle(Entry d) {
    BigInt h0 = 0;
    BigInt h1 = 0;
    for (Entry a = 0; a <= d; ++a) {
        const Entry b = d - a;
        if (b >= 0) ++h0;
    }
    for (Entry a = -1; a >= d + 1; --a) {
        const Entry b = d - a;
        if (b <= -1) ++h1;
    }
    return {h0, h1};
}

/// Weight of the canonical bundle of F(V): kappa_i = 2i - m - 1 (1-based).
inline Weight canonical_weight(std::size_t m) {
    std::vector<Entry> k(m);
    for (std::size_t i = 0; i < m; ++i) k[i] = 2 * static_cast<Entry>(i + 1) - static_cast<Entry>(m) - 1;
    return Weight(std::move(k));
}

/// Serre dual weight kappa - w, so that h^i(w) = h^{N-i}(serre_dual(w)).
/// O(-w) is the dual line bundle; no reversal is involved (on P^1,
/// w = (1,0) must pair with O(-3), i.e. (-2,1)).
inline Weight serre_dual(const Weight& w) { return subtract(canonical_weight(w.size()), w); }

/// dim F(V) = m(m-1)/2.
inline std::size_t flag_dimension(std::size_t m) { return m * (m - 1) / 2; }

}  // namespace bbw
