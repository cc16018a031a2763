#include <gtest/gtest.h>

#include "bbw/totalspace.hpp"

using namespace bbw;

namespace {

const GrassmannContext g24(2, 4);

}  // namespace

TEST(HomTotal, Examples) {
    const GradedHomProfile o1 = hom_total(g24, Weight{0, 0}, Weight{1, 1}, 30);
    EXPECT_TRUE(o1.vanishes_from(1));
    EXPECT_FALSE(o1.has_degree(1));

    const GradedHomProfile end0 = hom_total(g24, Weight{0, 0}, Weight{0, 0}, 0);
    ASSERT_EQ(end0.entries().size(), 1u);
    EXPECT_EQ(end0.dim(0, 0), 1);

    const GradedHomProfile o2 = hom_total(g24, Weight{0, 0}, Weight{2, 2}, 2);
    EXPECT_EQ(o2.dim(1, 2), 15);
    EXPECT_TRUE(o2.vanishes_from(2));
}

TEST(HomTotal, TargetVanishingForAmpleTwists) {
    for (Entry j = 1; j <= 3; ++j) {
        const GradedHomProfile p = hom_total(g24, Weight{0, 0}, Weight{j, j}, 30);
        EXPECT_TRUE(p.vanishes_from(2)) << "j=" << j;
        for (const auto& [key, dim] : p.entries()) {
            EXPECT_GE(dim, 1);
            EXPECT_LE(key.first, g24.dimension());
        }
    }
    // j = 2, 3 carry genuine Ext^1 on X0.
    EXPECT_TRUE(hom_total(g24, Weight{0, 0}, Weight{2, 2}, 30).has_degree(1));
    EXPECT_TRUE(hom_total(g24, Weight{0, 0}, Weight{3, 3}, 30).has_degree(1));
}

TEST(HomTotal, TwistInvariance) {
    const std::vector<std::pair<Weight, Weight>> pairs{
        {Weight{0, 0}, Weight{2, 2}}, {Weight{1, 0}, Weight{2, -1}}, {Weight{3, 1}, Weight{0, 0}}};
    for (const auto& [a, b] : pairs) {
        const GradedHomProfile base = hom_total(g24, a, b, 8);
        for (Entry c : {-3, 1, 5}) {
            const GradedHomProfile shifted = hom_total(g24, det_twist(a, c), det_twist(b, c), 8);
            EXPECT_EQ(shifted.entries(), base.entries());
            EXPECT_EQ(shifted.pieces(), base.pieces());
        }
    }
}

TEST(HomTotal, ThreadCountDoesNotChangeResult) {
    const GradedHomProfile serial = hom_total(GrassmannContext(2, 5), Weight{1, 0}, Weight{2, 1}, 10, 1);
    const GradedHomProfile parallel = hom_total(GrassmannContext(2, 5), Weight{1, 0}, Weight{2, 1}, 10, 4);
    EXPECT_EQ(serial, parallel);
}

TEST(CheckTilting, BeilinsonOnCotangentProjectiveSpace) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const TiltingReport r = check_tilting(GrassmannContext(1, n + 1), beilinson_collection(n), 20);
        EXPECT_TRUE(r.all_vanish()) << "n=" << n;
        EXPECT_EQ(r.verdicts.size(), (n + 1) * (n + 1) * n);
    }
}

TEST(CheckTilting, StructureSheaf) {
    for (const auto& [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 4}, {2, 5}}) {
        const GrassmannContext ctx(k, n);
        EXPECT_TRUE(check_tilting(ctx, {Weight::zero(k)}, 12).all_vanish());
    }
}

TEST(CheckTilting, G24LineBundleCollection) {
    const std::vector<Weight> collection{Weight{0, 0}, Weight{1, 1}, Weight{2, 2}, Weight{3, 3}};
    const TiltingReport r = check_tilting(g24, collection, 30, 2);
    EXPECT_EQ(r.verdicts.size(), 16u * 4u);
    EXPECT_TRUE(r.vanishes_from(2));
    EXPECT_FALSE(r.all_vanish());
    std::vector<std::pair<Weight, Weight>> ext1;
    for (const Verdict& v : r.verdicts) {
        if (v.status != VerdictStatus::nonzero) {
            EXPECT_FALSE(v.witness.has_value());
            continue;
        }
        ASSERT_TRUE(v.witness.has_value());
        EXPECT_EQ(v.degree, 1u);
        EXPECT_EQ(v.witness->degree, 1u);
        ext1.emplace_back(v.source, v.target);
    }
    const std::vector<std::pair<Weight, Weight>> expected{
        {Weight{0, 0}, Weight{2, 2}}, {Weight{0, 0}, Weight{3, 3}}, {Weight{1, 1}, Weight{3, 3}}};
    EXPECT_EQ(ext1, expected);
}

TEST(CheckTilting, Errors) {
    EXPECT_THROW(check_tilting(g24, {}, 3), std::invalid_argument);
    EXPECT_THROW(check_tilting(g24, {Weight{0, 1}}, 3), std::invalid_argument);
    EXPECT_THROW(check_tilting(g24, {Weight{0}}, 3), std::invalid_argument);
}

TEST(CheckLemmaVanishing, Examples) {
    EXPECT_TRUE(check_lemma_vanishing(g24, 0, 10).holds());
    EXPECT_TRUE(check_lemma_vanishing(GrassmannContext(1, 2), 1, 10).holds());
    EXPECT_TRUE(check_lemma_vanishing(g24, 3, 30).holds());
    EXPECT_TRUE(check_lemma_vanishing(GrassmannContext(2, 5), 2, 8).holds());
    EXPECT_THROW(check_lemma_vanishing(g24, -1, 3), std::invalid_argument);
}

TEST(G24Cases, Examples) {
    const G24Cell second = classify_g24(1, 0, 0);
    EXPECT_EQ(second.which, G24Case::second);
    EXPECT_TRUE(second.cohomology.is_vanishing());
    EXPECT_TRUE(second.agrees);

    const G24Cell lower = classify_g24(3, 0, 0);
    EXPECT_EQ(lower.which, G24Case::third_lower);
    EXPECT_TRUE(lower.cohomology.is_vanishing());
    EXPECT_TRUE(lower.consistent);

    const G24Cell upper = classify_g24(2, 2, 0);
    EXPECT_EQ(upper.which, G24Case::third_upper);
    ASSERT_FALSE(upper.cohomology.is_vanishing());
    EXPECT_EQ(upper.cohomology.degree(), 1u);
    EXPECT_EQ(upper.cohomology.dimension(), 15);

    const G24Cell wall = classify_g24(2, 0, 0);
    EXPECT_EQ(wall.which, G24Case::third_wall);
    EXPECT_TRUE(wall.cohomology.is_vanishing());

    const G24Cell first = classify_g24(1, 3, 1);
    EXPECT_EQ(first.which, G24Case::first);
    EXPECT_EQ(first.cohomology.degree(), 0u);
}

TEST(G24Cases, FullTableAgrees) {
    const G24CaseTable t = reproduce_g24_cases(30);
    EXPECT_TRUE(t.all_agree());
    // 256 partitions of size <= 30 with at most two rows, for each of three j.
    EXPECT_EQ(t.cells.size(), 3u * 256u);
    EXPECT_EQ(t.count(G24Case::third_wall), 2u);   // (j,l1) = (2,0), (3,1)
    EXPECT_EQ(t.count(G24Case::third_lower), 1u);  // j = 3, lambda = 0
    for (const G24Cell& c : t.cells)
        if (c.which == G24Case::third_upper) EXPECT_FALSE(c.cohomology.is_vanishing());
}

TEST(Beilinson, Table) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const BeilinsonEntry& e : beilinson_table(n)) EXPECT_TRUE(e.ok) << "n=" << n << " a=" << e.a << " b=" << e.b;
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(2, 5), 0);
}
