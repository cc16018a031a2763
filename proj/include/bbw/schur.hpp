#pragma once

// Tensor products of Schur functors of a rank-m bundle: Littlewood-Richardson
// coefficients by the lattice-word tableau rule, extended to arbitrary
// dominant weights by determinant twists.

#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbw/bott.hpp"
#include "bbw/weights.hpp"

namespace bbw {

/// Multiset of dominant weights of one length, with positive multiplicities.
/// Iteration order is lexicographic in the weight.
class SchurExpansion {
public:
    using Terms = std::map<Weight, BigInt>;

    SchurExpansion() = default;

    static SchurExpansion single(Weight w) {
        SchurExpansion e;
        e.add(std::move(w), 1);
        return e;
    }

    void add(Weight w, const BigInt& mult) {
        if (mult == 0) return;
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        if (!is_non_increasing(w)) throw std::invalid_argument("expansion key " + w.to_string() + " is not dominant");
        if (!terms_.empty() && terms_.begin()->first.size() != w.size())
            throw std::invalid_argument("expansion keys must share one length");
        terms_[std::move(w)] += mult;
    }

    void merge(const SchurExpansion& other, const BigInt& scale = 1) {
        for (const auto& [w, mult] : other.terms_) add(w, mult * scale);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    BigInt multiplicity(const Weight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// sum mult(nu) * dim Sigma^nu.
    BigInt total_dimension() const {
        BigInt total = 0;
        for (const auto& [w, mult] : terms_) total += mult * weyl_dim(w);
        return total;
    }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

private:
    Terms terms_;
};

namespace detail {

inline std::atomic<std::uint64_t> dimension_checks{0};

// Places the boxes labelled `label` (a horizontal strip of `count` boxes)
// row by row, subject to the lattice condition against label - 1.
class LittlewoodRichardson {
public:
    LittlewoodRichardson(const Partition& outer_start, const Partition& content, std::size_t rank)
        : rank_(rank), content_(content), shape_(outer_start.weight().vec()),
          placed_(rank, std::vector<Entry>(content.rows(), 0)) {}

    SchurExpansion run() {
        place_label(0);
        return std::move(result_);
    }

private:
    void place_label(std::size_t label) {
        if (label == content_.rows()) {
            result_.add(Weight(shape_), 1);
            return;
        }
        const std::vector<Entry> before = shape_;
        place_row(label, 0, content_[label], before, 0, 0);
    }

    // `placed_here` counts label boxes in rows < row; `prev_above` counts
    // label-1 boxes in rows < row.
    void place_row(std::size_t label, std::size_t row, Entry remaining, const std::vector<Entry>& before,
                   Entry placed_here, Entry prev_above) {
        if (remaining == 0) {
            place_label(label + 1);
            return;
        }
        if (row == rank_) return;
        Entry cap = remaining;
        if (row > 0) cap = std::min(cap, before[row - 1] - before[row]);
        if (label > 0) cap = std::min(cap, prev_above - placed_here);
        const Entry prev_in_row = label > 0 ? placed_[row][label - 1] : 0;
        for (Entry take = cap; take >= 0; --take) {
            shape_[row] += take;
            placed_[row][label] = take;
            place_row(label, row + 1, remaining - take, before, placed_here + take, prev_above + prev_in_row);
            shape_[row] -= take;
            placed_[row][label] = 0;
        }
    }

    std::size_t rank_;
    Partition content_;
    std::vector<Entry> shape_;
    std::vector<std::vector<Entry>> placed_;
    SchurExpansion result_;
};

inline void check_dimension(const SchurExpansion& e, const BigInt& expected, const char* what) {
    dimension_checks.fetch_add(1, std::memory_order_relaxed);
    const BigInt got = e.total_dimension();
    if (got != expected)
        throw std::logic_error(std::string(what) + ": dimension not conserved (" + got.str() + " != " +
                               expected.str() + ")");
}

}  // namespace detail

/// Number of dimension-conservation checks run so far in this process.
inline std::uint64_t dimension_checks_performed() { return detail::dimension_checks.load(); }

/// Sigma^lambda (x) Sigma^mu for a rank-m bundle: keys nu with at most m rows,
/// |nu| = |lambda| + |mu|, multiplicities c^nu_{lambda mu}.
inline SchurExpansion lr_coefficients(const Partition& lambda, const Partition& mu, std::size_t rank) {
    if (lambda.rows() > rank || mu.rows() > rank)
        throw std::invalid_argument("partition has more rows than the rank " + std::to_string(rank));
    const Partition outer = lambda.with_length(rank);
    const Partition inner = mu.with_length(rank);
    // Filling the smaller partition into the larger keeps the search small;
    // the coefficients are symmetric.
    const bool swap = inner.size() > outer.size();
    SchurExpansion e = swap ? detail::LittlewoodRichardson(inner, outer, rank).run()
                            : detail::LittlewoodRichardson(outer, inner, rank).run();
    detail::check_dimension(e, weyl_dim(outer.weight()) * weyl_dim(inner.weight()), "lr_coefficients");
    return e;
}

/// Sigma^a (x) Sigma^b for dominant weights of a rank-m bundle, possibly
/// negative. Each factor is twisted by c = -min(entries) into a partition,
/// multiplied by the LR rule, and the result is twisted back by the sum of
/// the two shifts.
inline SchurExpansion tensor_weights(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("tensor_weights: length mismatch");
    if (a.empty()) throw std::invalid_argument("tensor_weights: empty weight");
    if (!is_non_increasing(a) || !is_non_increasing(b))
        throw std::invalid_argument("tensor_weights: non-dominant input " + a.to_string() + " (x) " + b.to_string());
    const std::size_t m = a.size();
    const Entry ca = -a.min();
    const Entry cb = -b.min();
    const SchurExpansion product =
        lr_coefficients(Partition::from_weight(det_twist(a, ca)), Partition::from_weight(det_twist(b, cb)), m);
    SchurExpansion out;
    for (const auto& [nu, mult] : product) out.add(det_twist(nu, -(ca + cb)), mult);
    detail::check_dimension(out, weyl_dim(a) * weyl_dim(b), "tensor_weights");
    return out;
}

/// Tensor every term of an expansion with Sigma^b.
inline SchurExpansion tensor_weights(const SchurExpansion& e, const Weight& b) {
    SchurExpansion out;
    for (const auto& [w, mult] : e) out.merge(tensor_weights(w, b), mult);
    return out;
}

}  // namespace bbw
