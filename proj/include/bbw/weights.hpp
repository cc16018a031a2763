#pragma once

// Integer weights of GL(m) and the rho-shifted (tilde) action of the
// symmetric group used by the Bott walk.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bbw {

using Entry = std::int64_t;

/// Fixed-length integer sequence, the highest weight of a Schur functor.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Entry> entries) : entries_(std::move(entries)) {}
    Weight(std::initializer_list<Entry> entries) : entries_(entries) {}

    /// The zero weight of the given length.
    static Weight zero(std::size_t length) { return Weight(std::vector<Entry>(length, 0)); }
    /// (c, c, ..., c): the weight of det^c.
    static Weight constant(std::size_t length, Entry c) {
        return Weight(std::vector<Entry>(length, c));
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Entry operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Entry> entries() const noexcept { return entries_; }
    const std::vector<Entry>& vec() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    Entry sum() const {
        Entry s = 0;
        for (Entry e : entries_) s += e;
        return s;
    }
    Entry min() const { return entries_.empty() ? 0 : *std::min_element(begin(), end()); }
    Entry max() const { return entries_.empty() ? 0 : *std::max_element(begin(), end()); }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        return out + ")";
    }

private:
    std::vector<Entry> entries_;
};

/// Concatenation (a_1..a_k, b_1..b_l).
inline Weight concat(const Weight& a, const Weight& b) {
    std::vector<Entry> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Weight(std::move(out));
}

inline bool is_non_increasing(const Weight& w) {
    return std::is_sorted(w.begin(), w.end(), std::greater<>{});
}

/// rho = (m-1, m-2, ..., 0).
inline Weight rho(std::size_t m) {
    std::vector<Entry> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Entry>(m - 1 - i);
    return Weight(std::move(r));
}

inline Weight add(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
    std::vector<Entry> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return Weight(std::move(out));
}

inline Weight subtract(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
    std::vector<Entry> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return Weight(std::move(out));
}

/// Plain transposition of positions l and l+1 (l is 1-based).
inline Weight transpose(const Weight& w, std::size_t l) {
    if (l < 1 || l + 1 > w.size())
        throw std::out_of_range("transposition index " + std::to_string(l) + " out of range for length " +
                                std::to_string(w.size()));
    std::vector<Entry> out = w.vec();
    std::swap(out[l - 1], out[l]);
    return Weight(std::move(out));
}

/// Tilde action of the transposition (l l+1), l 1-based:
/// (.., d_l, d_{l+1}, ..) -> (.., d_{l+1} - 1, d_l + 1, ..).
/// Equals transpose(w + rho, l) - rho.
inline Weight tilde_transpose(const Weight& w, std::size_t l) {
    if (l < 1 || l + 1 > w.size())
        throw std::out_of_range("transposition index " + std::to_string(l) + " out of range for length " +
                                std::to_string(w.size()));
    std::vector<Entry> out = w.vec();
    const Entry left = out[l - 1];
    const Entry right = out[l];
    out[l - 1] = right - 1;
    out[l] = left + 1;
    return Weight(std::move(out));
}

/// Weight of the dual: Sigma^w(E^vee) = Sigma^{(-w_m, ..., -w_1)} E.
inline Weight dual_weight(const Weight& w) {
    std::vector<Entry> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = -w[w.size() - 1 - i];
    return Weight(std::move(out));
}

/// Tensoring with det^c adds c to every entry.
inline Weight det_twist(const Weight& w, Entry c) {
    std::vector<Entry> out(w.begin(), w.end());
    for (Entry& e : out) e += c;
    return Weight(std::move(out));
}

/// Non-increasing sequence of non-negative integers with an ambient length
/// (the rank of the bundle it is applied to). Stored padded with zeros.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if parts are not a partition or have
    /// more than `ambient_length` nonzero rows.
    Partition(std::vector<Entry> parts, std::size_t ambient_length) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        if (parts.size() > ambient_length)
            throw std::invalid_argument("partition has " + std::to_string(parts.size()) +
                                        " nonzero rows, more than the rank " + std::to_string(ambient_length));
        parts.resize(ambient_length, 0);
        parts_ = Weight(std::move(parts));
    }

    /// Accepts a non-increasing, non-negative weight of any length.
    static Partition from_weight(const Weight& w) { return Partition(w.vec(), w.size()); }

    std::size_t ambient_length() const noexcept { return parts_.size(); }
    std::size_t rows() const {
        std::size_t r = 0;
        while (r < parts_.size() && parts_[r] != 0) ++r;
        return r;
    }
    Entry size() const { return parts_.sum(); }
    Entry operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const Weight& weight() const noexcept { return parts_; }

    /// Same parts, different ambient length (rows must still fit).
    Partition with_length(std::size_t ambient_length) const { return Partition(parts_.vec(), ambient_length); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    Weight parts_;
};

/// All partitions of `total` with at most `max_rows` rows, in decreasing
/// lexicographic order, each padded to `ambient_length`.
inline std::vector<Partition> partitions_of(Entry total, std::size_t max_rows, std::size_t ambient_length) {
    std::vector<Partition> out;
    if (total < 0) return out;
    if (max_rows > ambient_length) max_rows = ambient_length;
    std::vector<Entry> current;
    auto rec = [&](auto&& self, Entry remaining, Entry cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current, ambient_length);
            return;
        }
        if (current.size() == max_rows) return;
        for (Entry part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

}  // namespace bbw
