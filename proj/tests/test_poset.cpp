#include <gtest/gtest.h>

#include "devlat/poset.hpp"
#include "support/generators.hpp"

using namespace devlat;
using namespace devlat::testing;

namespace {

FinitePoset vposet() { return FinitePoset::from_relation({"a", "b", "c"}, {{0, 2}, {1, 2}}); }

} // namespace

TEST(FinitePoset, ClosesRelationOnConstruction) {
    const FinitePoset p = FinitePoset::from_relation({"0", "1", "2"}, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.leq(0, 2));
    EXPECT_TRUE(p.leq(1, 1));
    EXPECT_FALSE(p.leq(2, 0));
}

TEST(FinitePoset, RejectsCyclesAndDuplicateIds) {
    EXPECT_THROW(FinitePoset::from_relation({"a", "b"}, {{0, 1}, {1, 0}}), InputError);
    EXPECT_THROW(FinitePoset::antichain({"a", "a"}), InputError);
}

TEST(FinitePoset, RejectsNonTransitiveMatrix) {
    std::vector<bool> rel = {true, true, false, false, true, true, false, false, true};
    EXPECT_THROW(FinitePoset({"0", "1", "2"}, rel), InputError);
}

TEST(FinitePoset, UnknownIdIsInputError) { EXPECT_THROW(vposet().index_of("z"), InputError); }

TEST(FinitePoset, CoversOfChain) {
    const FinitePoset p = FinitePoset::chain({"0", "1", "2"});
    const auto covers = p.covers();
    ASSERT_EQ(covers.size(), 2u);
    EXPECT_EQ(covers[0], std::make_pair(Element{0}, Element{1}));
    EXPECT_EQ(covers[1], std::make_pair(Element{1}, Element{2}));
}

TEST(FinitePoset, DualAndInduced) {
    const FinitePoset p = vposet();
    const FinitePoset d = p.dual();
    EXPECT_TRUE(d.leq(2, 0));
    const FinitePoset sub = p.induced({0, 2});
    EXPECT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub.id(1), "c");
    EXPECT_TRUE(sub.leq(0, 1));
}

TEST(FinitePoset, Convexity) {
    const FinitePoset p = FinitePoset::chain({"0", "1", "2"});
    EXPECT_TRUE(p.is_convex({0, 1}));
    EXPECT_FALSE(p.is_convex({0, 2}));
}

TEST(Shadow, ChainLowerShadow) {
    const FinitePoset p = FinitePoset::chain({"0", "1", "2"});
    EXPECT_EQ(shadow(p, {0, 1}, 2, ShadowSide::lower), ElementSet({1}));
}

TEST(Shadow, EmptyCandidateSet) {
    const FinitePoset p = vposet();
    for (Element x = 0; x < p.size(); ++x) {
        EXPECT_TRUE(shadow(p, {}, x, ShadowSide::lower).empty());
        EXPECT_TRUE(shadow(p, {}, x, ShadowSide::upper).empty());
    }
}

TEST(Shadow, AntichainHasNoShadow) {
    const FinitePoset p = FinitePoset::antichain({"a", "b"});
    EXPECT_TRUE(shadow(p, {0}, 1, ShadowSide::lower).empty());
}

TEST(Shadow, MinimalAndValidOnRandomPosets) {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        const FinitePoset p = random_poset(rng, uniform(rng, 1, 8), 0.4);
        std::vector<Element> pick;
        for (Element x = 0; x < p.size(); ++x) {
            if (coin(rng)) pick.push_back(x);
        }
        const ElementSet a = make_set(pick);
        for (Element x = 0; x < p.size(); ++x) {
            for (ShadowSide side : {ShadowSide::lower, ShadowSide::upper}) {
                const ElementSet u = shadow(p, a, x, side);
                ASSERT_TRUE(is_shadow(p, a, u, x, side));
                // Dropping any member breaks the shadow equality.
                for (std::size_t k = 0; k < u.size(); ++k) {
                    ElementSet smaller = u;
                    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
                    EXPECT_FALSE(is_shadow(p, a, smaller, x, side));
                }
            }
        }
    }
}
