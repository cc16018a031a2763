#pragma once

// Graded Hom profiles on the cotangent bundle X0 = T*G(k, n), tilting and
// vanishing checks for collections of pulled-back Schur functors, and the
// case table for G(2,4).
//
// Functions on X0 are graded by Sym^d T_G, so
//   Hom^i_X0(pi^* Sigma^alpha U, pi^* Sigma^beta U)
//     = sum_d Hom^i_G(Sigma^alpha U, Sigma^beta U (x) Sym^d T_G).
// On the deformation X, pi_* O_X has a filtration with the same graded
// pieces, so vanishing of every piece in a degree i forces vanishing on X;
// a nonzero piece is exact on X0 and only an upper bound on X.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bbw/grassmann.hpp"

namespace bbw {

namespace detail {

// Runs fn(0..count-1) on up to `threads` workers. fn must only write to
// its own output slot.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
}

}  // namespace detail

/// Thread count from BBW_TILT_THREADS, else all cores.
inline std::size_t default_threads() {
    if (const char* env = std::getenv("BBW_TILT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// dim Hom^i_G(Sigma^alpha U, Sigma^beta U (x) Sigma^lambda-piece of Sym^n T_G).
struct GradedPiece {
    std::size_t degree;  // cohomological degree i
    std::size_t sym_degree;
    Partition lambda;
    BigInt dim;

    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

class GradedHomProfile {
public:
    GradedHomProfile(GrassmannContext ctx, Weight alpha, Weight beta, std::size_t cutoff)
        : ctx_(ctx), alpha_(std::move(alpha)), beta_(std::move(beta)), cutoff_(cutoff) {}

    const GrassmannContext& context() const noexcept { return ctx_; }
    const Weight& alpha() const noexcept { return alpha_; }
    const Weight& beta() const noexcept { return beta_; }
    std::size_t cutoff() const noexcept { return cutoff_; }

    /// (i, sym degree) -> dim, zeros omitted.
    const std::map<std::pair<std::size_t, std::size_t>, BigInt>& entries() const noexcept { return entries_; }
    /// Nonzero per-lambda pieces, ordered by (sym degree, i, lambda descending).
    const std::vector<GradedPiece>& pieces() const noexcept { return pieces_; }

    BigInt dim(std::size_t i, std::size_t sym_degree) const {
        auto it = entries_.find({i, sym_degree});
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    bool has_degree(std::size_t i) const {
        return std::any_of(entries_.begin(), entries_.end(), [&](const auto& kv) { return kv.first.first == i; });
    }

    bool vanishes_from(std::size_t i_min) const {
        return std::none_of(entries_.begin(), entries_.end(),
                            [&](const auto& kv) { return kv.first.first >= i_min; });
    }

    /// First piece in degree i (smallest sym degree), if any.
    std::optional<GradedPiece> witness(std::size_t i) const {
        for (const GradedPiece& p : pieces_)
            if (p.degree == i) return p;
        return std::nullopt;
    }

    void add_piece(GradedPiece piece) {
        if (piece.dim == 0) return;
        if (piece.degree > ctx_.dimension())
            throw std::logic_error("cohomological degree exceeds dim G");
        entries_[{piece.degree, piece.sym_degree}] += piece.dim;
        pieces_.push_back(std::move(piece));
    }

    friend bool operator==(const GradedHomProfile&, const GradedHomProfile&) = default;

private:
    GrassmannContext ctx_;
    Weight alpha_;
    Weight beta_;
    std::size_t cutoff_;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> entries_;
    std::vector<GradedPiece> pieces_;
};

/// Graded Hom^*_X0(pi^* Sigma^alpha U, pi^* Sigma^beta U) for sym degrees 0..cutoff.
inline GradedHomProfile hom_total(const GrassmannContext& ctx, const Weight& alpha, const Weight& beta,
                                  std::size_t cutoff, std::size_t threads = 1) {
    std::vector<std::vector<LambdaPiece>> per_degree(cutoff + 1);
    detail::parallel_for(cutoff + 1, threads,
                         [&](std::size_t d) { per_degree[d] = hom_grassmann_pieces(ctx, alpha, beta, d); });
    GradedHomProfile profile(ctx, alpha, beta, cutoff);
    for (std::size_t d = 0; d <= cutoff; ++d)
        for (const LambdaPiece& piece : per_degree[d])
            for (const auto& [i, dim] : piece.h) profile.add_piece(GradedPiece{i, d, piece.lambda, dim});
    return profile;
}

enum class VerdictStatus { certified_zero, nonzero };

struct Verdict {
    Weight source;
    Weight target;
    std::size_t degree;
    VerdictStatus status;
    std::optional<GradedPiece> witness;  // set iff status == nonzero

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Verdicts for every ordered pair of the collection and every 1 <= i <= dim G.
struct TiltingReport {
    GrassmannContext context;
    std::vector<Weight> collection;
    std::size_t cutoff;
    std::vector<Verdict> verdicts;

    bool all_vanish() const {
        return std::all_of(verdicts.begin(), verdicts.end(),
                           [](const Verdict& v) { return v.status == VerdictStatus::certified_zero; });
    }
    bool vanishes_from(std::size_t i_min) const {
        return std::all_of(verdicts.begin(), verdicts.end(), [&](const Verdict& v) {
            return v.degree < i_min || v.status == VerdictStatus::certified_zero;
        });
    }

    friend bool operator==(const TiltingReport&, const TiltingReport&) = default;
};

inline TiltingReport check_tilting(const GrassmannContext& ctx, const std::vector<Weight>& collection,
                                   std::size_t cutoff, std::size_t threads = 1) {
    if (collection.empty()) throw std::invalid_argument("check_tilting: empty collection");
    for (const Weight& w : collection) {
        if (w.size() != ctx.k()) throw std::invalid_argument("collection weight " + w.to_string() + " has wrong length");
        if (!is_non_increasing(w)) throw std::invalid_argument("collection weight " + w.to_string() + " is not dominant");
    }
    const std::size_t members = collection.size();
    const std::size_t degrees = cutoff + 1;
    std::vector<std::vector<LambdaPiece>> work(members * members * degrees);
    detail::parallel_for(work.size(), threads, [&](std::size_t idx) {
        const std::size_t d = idx % degrees;
        const std::size_t pair = idx / degrees;
        work[idx] = hom_grassmann_pieces(ctx, collection[pair / members], collection[pair % members], d);
    });

    TiltingReport report{ctx, collection, cutoff, {}};
    for (std::size_t s = 0; s < members; ++s) {
        for (std::size_t t = 0; t < members; ++t) {
            GradedHomProfile profile(ctx, collection[s], collection[t], cutoff);
            for (std::size_t d = 0; d < degrees; ++d)
                for (const LambdaPiece& piece : work[(s * members + t) * degrees + d])
                    for (const auto& [i, dim] : piece.h) profile.add_piece(GradedPiece{i, d, piece.lambda, dim});
            for (std::size_t i = 1; i <= ctx.dimension(); ++i) {
                std::optional<GradedPiece> w = profile.witness(i);
                const VerdictStatus status = w ? VerdictStatus::nonzero : VerdictStatus::certified_zero;
                report.verdicts.push_back(Verdict{collection[s], collection[t], i, status, std::move(w)});
            }
        }
    }
    return report;
}

/// One i > 0 graded piece of H^i(X0, O_X(j)).
struct VanishingViolation {
    Entry twist;
    GradedPiece piece;

    friend bool operator==(const VanishingViolation&, const VanishingViolation&) = default;
};

struct VanishingReport {
    GrassmannContext context;
    Entry j_max;
    std::size_t cutoff;
    std::vector<VanishingViolation> violations;

    bool holds() const noexcept { return violations.empty(); }
};

/// H^i(X0, O_X(j)) = 0 for i > 0 and 0 <= j <= j_max, per sym degree up to
/// cutoff, with O_X(j) the pullback of Sigma^{(-j,...,-j)} U.
inline VanishingReport check_lemma_vanishing(const GrassmannContext& ctx, Entry j_max, std::size_t cutoff,
                                             std::size_t threads = 1) {
    if (j_max < 0) throw std::invalid_argument("j_max must be >= 0");
    VanishingReport report{ctx, j_max, cutoff, {}};
    for (Entry j = 0; j <= j_max; ++j) {
        const GradedHomProfile profile =
            hom_total(ctx, Weight::zero(ctx.k()), Weight::constant(ctx.k(), -j), cutoff, threads);
        for (const GradedPiece& p : profile.pieces())
            if (p.degree > 0) report.violations.push_back(VanishingViolation{j, p});
    }
    return report;
}

// ---------------------------------------------------------------------------
// G(2,4): H^i(F(V), O(l1 - j, l2 - j, -l2, -l1)) for 0 < j < 4.

enum class G24Case {
    first,          // l2 - j >= -l2
    second,         // l2 - j + 1 == -l2
    third_upper,    // l2 - j + 1 < -l2, l1 - j >= -1
    third_wall,     // l2 - j + 1 < -l2, l1 - j + 1 == -1
    third_lower,    // l2 - j + 1 < -l2, l1 - j + 1 < -1
};

enum class G24Prediction { only_degree_zero, vanishes, at_most_degree_one };

inline const char* to_string(G24Case c) {
    switch (c) {
        case G24Case::first: return "first";
        case G24Case::second: return "second";
        case G24Case::third_upper: return "third:upper";
        case G24Case::third_wall: return "third:wall";
        case G24Case::third_lower: return "third:lower";
    }
    return "?";
}

inline const char* to_string(G24Prediction p) {
    switch (p) {
        case G24Prediction::only_degree_zero: return "only-degree-0";
        case G24Prediction::vanishes: return "vanishes";
        case G24Prediction::at_most_degree_one: return "at-most-degree-1";
    }
    return "?";
}

struct G24Cell {
    Entry j;
    Entry lambda1;
    Entry lambda2;
    Weight flag_weight;
    G24Case which;
    G24Prediction prediction;
    BottResult cohomology;
    bool consistent;  // side conditions of the case hold (l2 = 0, j in {2,3}, ...)
    bool agrees;      // prediction matches the Bott computation
};

struct G24CaseTable {
    std::size_t max_size;
    std::vector<G24Cell> cells;

    bool all_agree() const {
        return std::all_of(cells.begin(), cells.end(), [](const G24Cell& c) { return c.agrees && c.consistent; });
    }
    std::size_t count(G24Case which) const {
        return static_cast<std::size_t>(
            std::count_if(cells.begin(), cells.end(), [&](const G24Cell& c) { return c.which == which; }));
    }
};

/// Classify (j, lambda) by the inequalities on the flag weight.
inline G24Cell classify_g24(Entry j, Entry l1, Entry l2) {
    if (j < 1 || j > 3 || l1 < l2 || l2 < 0) throw std::invalid_argument("classify_g24: need 0 < j < 4, l1 >= l2 >= 0");
    const Weight delta{l1 - j, l2 - j, -l2, -l1};
    G24Cell cell{j, l1, l2, delta, G24Case::first, G24Prediction::only_degree_zero, bott(delta), true, false};
    if (l2 - j >= -l2) {
        cell.which = G24Case::first;
        cell.prediction = G24Prediction::only_degree_zero;
    } else if (l2 - j + 1 == -l2) {
        cell.which = G24Case::second;
        cell.prediction = G24Prediction::vanishes;
    } else {
        cell.consistent = l2 == 0 && (j == 2 || j == 3) &&
                          tilde_transpose(delta, 2) == Weight{l1 - j, -1, -j + 1, -l1};
        if (l1 - j >= -1) {
            cell.which = G24Case::third_upper;
            cell.prediction = G24Prediction::at_most_degree_one;
        } else if (l1 - j + 1 == -1) {
            cell.which = G24Case::third_wall;
            cell.prediction = G24Prediction::vanishes;
        } else {
            cell.which = G24Case::third_lower;
            cell.prediction = G24Prediction::vanishes;
            cell.consistent = cell.consistent && l1 == 0 && j == 3;
        }
    }
    const BottResult& h = cell.cohomology;
    switch (cell.prediction) {
        case G24Prediction::only_degree_zero: cell.agrees = !h.is_vanishing() && h.degree() == 0; break;
        case G24Prediction::vanishes: cell.agrees = h.is_vanishing(); break;
        case G24Prediction::at_most_degree_one: cell.agrees = h.is_vanishing() || h.degree() == 1; break;
    }
    return cell;
}

/// Every (j, lambda) with j in {1,2,3}, lambda = (l1 >= l2 >= 0), |lambda| <= max_size.
inline G24CaseTable reproduce_g24_cases(std::size_t max_size = 30) {
    G24CaseTable table{max_size, {}};
    const Entry bound = static_cast<Entry>(max_size);
    for (Entry j = 1; j <= 3; ++j)
        for (Entry size = 0; size <= bound; ++size)
            for (Entry l2 = 0; 2 * l2 <= size; ++l2) table.cells.push_back(classify_g24(j, size - l2, l2));
    return table;
}

// ---------------------------------------------------------------------------
// P^n = G(1, n+1): O(-a) = Sigma^{(a)} U.

struct BeilinsonEntry {
    Entry a;
    Entry b;
    DegreeMap ext;        // Ext^i(O(-a), O(-b)) on P^n
    BigInt expected_hom;  // C(a-b+n, n) for a >= b, else 0
    bool ok;
};

inline BigInt binomial(Entry top, Entry bottom) {
    if (bottom < 0 || top < bottom) return 0;
    BigInt r = 1;
    for (Entry i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
    return r;
}

/// Ext^*(O(-a), O(-b)) on P^n for 0 <= a, b <= n.
inline std::vector<BeilinsonEntry> beilinson_table(std::size_t n) {
    const GrassmannContext ctx(1, n + 1);
    const Entry top = static_cast<Entry>(n);
    std::vector<BeilinsonEntry> out;
    for (Entry a = 0; a <= top; ++a) {
        for (Entry b = 0; b <= top; ++b) {
            DegreeMap ext = hom_grassmann(ctx, Weight{a}, Weight{b}, 0);
            const BigInt expected = a >= b ? binomial(a - b + top, top) : BigInt(0);
            bool ok = std::all_of(ext.begin(), ext.end(), [](const auto& kv) { return kv.first == 0; });
            const auto h0 = ext.find(0);
            ok = ok && (h0 == ext.end() ? BigInt(0) : h0->second) == expected;
            out.push_back(BeilinsonEntry{a, b, std::move(ext), expected, ok});
        }
    }
    return out;
}

/// The collection {O(-a) : 0 <= a <= n} on P^n, as weights on U.
inline std::vector<Weight> beilinson_collection(std::size_t n) {
    std::vector<Weight> out;
    for (Entry a = 0; a <= static_cast<Entry>(n); ++a) out.push_back(Weight{a});
    return out;
}

}  // namespace bbw
