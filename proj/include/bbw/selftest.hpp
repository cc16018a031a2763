#pragma once

// Oracle suites shared by the `selftest` subcommand and the acceptance run.
// Each suite compares a library route against an independent one.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bbw/bott.hpp"
#include "bbw/oracle.hpp"
#include "bbw/schur.hpp"
#include "bbw/weights.hpp"

namespace bbw::selftest {

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;  // first few only

    bool passed() const noexcept { return failures.empty() && checks > 0; }
    void fail(std::string what) {
        if (failures.size() < 10) failures.push_back(std::move(what));
        else if (failures.size() == 10) failures.push_back("...");
    }
};

inline Weight random_weight(std::mt19937_64& rng, std::size_t m, Entry lo, Entry hi) {
    std::uniform_int_distribution<Entry> dist(lo, hi);
    std::vector<Entry> w(m);
    for (Entry& e : w) e = dist(rng);
    return Weight(std::move(w));
}

/// Calls fn on every weight in [lo, hi]^m.
template <class Fn>
void for_each_in_box(std::size_t m, Entry lo, Entry hi, Fn&& fn) {
    std::vector<Entry> w(m, lo);
    for (;;) {
        fn(Weight(w));
        std::size_t pos = 0;
        while (pos < m && w[pos] == hi) w[pos++] = lo;
        if (pos == m) return;
        ++w[pos];
    }
}

/// Euler characteristic by the Weyl product against the signed Bott dimension.
inline SuiteResult euler_oracle(std::uint64_t seed, std::size_t samples = 1000) {
    SuiteResult r{"euler-oracle", 0, {}};
    auto check = [&](const Weight& w) {
        ++r.checks;
        if (euler_characteristic(w) != bott(w).signed_dimension()) r.fail(w.to_string());
    };
    for_each_in_box(4, -4, 4, check);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) check(random_weight(rng, 4, -8, 8));
    return r;
}

/// h^i(w) = h^{N-i}(kappa - w) on F(C^m), m in {2,3,4}.
inline SuiteResult serre_duality(std::uint64_t seed, std::size_t samples = 500) {
    SuiteResult r{"serre-duality", 0, {}};
    std::mt19937_64 rng(seed ^ 0x5e77eULL);
    std::uniform_int_distribution<std::size_t> rank(2, 4);
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t m = rank(rng);
        const Weight w = random_weight(rng, m, -6, 6);
        const BottResult h = bott(w);
        const BottResult dual = bott(serre_dual(w));
        const std::size_t top = flag_dimension(m);
        ++r.checks;
        for (std::size_t i = 0; i <= top; ++i)
            if (h.h(i) != dual.h(top - i)) {
                r.fail(w.to_string() + " at i=" + std::to_string(i));
                break;
            }
    }
    return r;
}

/// LR rule against Schur-polynomial multiplication, |lambda|, |mu| <= max_size, ranks 1..max_rank.
inline SuiteResult lr_oracle(Entry max_size = 6, std::size_t max_rank = 4) {
    SuiteResult r{"lr-oracle", 0, {}};
    for (std::size_t m = 1; m <= max_rank; ++m) {
        std::vector<Partition> parts;
        for (Entry s = 0; s <= max_size; ++s)
            for (Partition& p : partitions_of(s, m, m)) parts.push_back(std::move(p));
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                ++r.checks;
                const SchurExpansion got = lr_coefficients(a, b, m);
                const auto expected = oracle::lr_by_polynomials(a, b, m);
                if (got.terms() != expected)
                    r.fail(a.weight().to_string() + " x " + b.weight().to_string() + " rank " + std::to_string(m));
            }
        }
    }
    return r;
}

/// Bott on P^1 against Cech monomial counts.
inline SuiteResult p1_cech(Entry range = 10) {
    SuiteResult r{"p1-cech", 0, {}};
    for (Entry d = -range; d <= range; ++d) {
        ++r.checks;
        const auto [h0, h1] = cech_p1_oracle(d);
        const BottResult b = bott(Weight{d, 0});
        if (b.h(0) != h0 || b.h(1) != h1) r.fail("d=" + std::to_string(d));
    }
    return r;
}

/// Sorted route against the literal tilde-transposition walk.
inline SuiteResult walk_replay(std::uint64_t seed, std::size_t samples = 1000) {
    SuiteResult r{"bott-walk-replay", 0, {}};
    auto check = [&](const Weight& w) {
        ++r.checks;
        if (!(bott(w) == bott_walk(w))) r.fail(w.to_string());
    };
    for_each_in_box(4, -4, 4, check);
    std::mt19937_64 rng(seed ^ 0xb077ULL);
    std::uniform_int_distribution<std::size_t> rank(1, 6);
    for (std::size_t s = 0; s < samples; ++s) check(random_weight(rng, rank(rng), -8, 8));
    return r;
}

/// Tilde action: involution, and equal to the rho-shifted plain transposition.
inline SuiteResult tilde_action(std::uint64_t seed, std::size_t samples = 1000) {
    SuiteResult r{"tilde-action", 0, {}};
    std::mt19937_64 rng(seed ^ 0x711deULL);
    std::uniform_int_distribution<std::size_t> rank(2, 8);
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t m = rank(rng);
        const Weight w = random_weight(rng, m, -10, 10);
        for (std::size_t l = 1; l < m; ++l) {
            ++r.checks;
            const Weight t = tilde_transpose(w, l);
            if (tilde_transpose(t, l) != w) r.fail("involution " + w.to_string());
            if (add(t, rho(m)) != transpose(add(w, rho(m)), l)) r.fail("rho identity " + w.to_string());
        }
    }
    return r;
}

inline std::vector<SuiteResult> run_all(std::uint64_t seed) {
    return {tilde_action(seed), p1_cech(), walk_replay(seed), euler_oracle(seed), serre_duality(seed), lr_oracle()};
}

}  // namespace bbw::selftest
