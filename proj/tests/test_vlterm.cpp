#include <gtest/gtest.h>

#include "devlat/vlterm.hpp"
#include "support/generators.hpp"

using namespace devlat;
using namespace devlat::testing;

namespace {

Rational eval(const char* text, Point p) { return evaluate(parse_term(text, p.size()), p); }

} // namespace

TEST(Evaluate, LatticeOperations) {
    EXPECT_EQ(eval("g0 \\/ g1", {1, 3}), 3);
    EXPECT_EQ(eval("g0 /\\ g1", {1, 3}), 1);
    EXPECT_EQ(eval("|g0 - g1|", {1, 3}), 2);
    EXPECT_EQ(eval("(g0 - g1)^+", {1, 3}), 0);
    EXPECT_EQ(eval("(g1 - g0)^+", {1, 3}), 2);
    EXPECT_EQ(eval("2*g0 - 1/2*one", {ratio(1, 4)}), 0);
}

TEST(Evaluate, MeetBindsTighterThanJoin) {
    // g0 \/ (g1 /\ g2)
    EXPECT_EQ(eval("g0 \\/ g1 /\\ g2", {2, 5, 1}), 2);
    EXPECT_EQ(eval("(g0 \\/ g1) /\\ g2", {2, 5, 1}), 1);
}

TEST(Evaluate, MissingCoordinateIsInputError) {
    EXPECT_THROW(evaluate(VLTerm::gen(2), {1, 2}), InputError);
}

TEST(ParseTerm, ArityCheck) {
    EXPECT_NO_THROW(parse_term("g0 + g1", 2));
    EXPECT_THROW(parse_term("g0 + g2", 2), InputError);
    EXPECT_EQ(parse_term("g4").arity(), 5u);
    EXPECT_EQ(parse_term("one").arity(), 0u);
}

TEST(ParseTerm, MalformedIsInputError) {
    for (const char* bad : {"", "g", "g0 +", "(g0", "|g0", "g0 \\/", "g0 ^", "2*", "x0", "g0 g1"}) {
        EXPECT_THROW(parse_term(bad), InputError) << bad;
    }
}

TEST(FormatTerm, RecognisesAbsAndPositivePart) {
    EXPECT_EQ(format_term(abs(VLTerm::gen(0))), "|g0|");
    EXPECT_EQ(format_term(pos(VLTerm::gen(1))), "g1^+");
    EXPECT_EQ(format_term(VLTerm::one()), "one");
}

TEST(FormatTerm, RoundTripPreservesValues) {
    Rng rng(73);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = uniform(rng, 1, 3);
        const VLTerm t = random_term(rng, n, 3);
        const std::string text = format_term(t);
        const VLTerm back = parse_term(text, n);
        // Negated constants fold on the first pass; the text is stable after that.
        EXPECT_EQ(format_term(parse_term(format_term(back))), format_term(back));
        for (int k = 0; k < 10; ++k) {
            const Point p = random_point(rng, n);
            EXPECT_EQ(evaluate(back, p), evaluate(t, p)) << text;
        }
    }
}

TEST(Substitute, IsHomomorphic) {
    Rng rng(79);
    for (int i = 0; i < 100; ++i) {
        const VLTerm t = random_term(rng, 2, 3);
        const std::vector<VLTerm> sigma = {random_term(rng, 3, 2), random_term(rng, 3, 2)};
        const VLTerm s = substitute(t, sigma);
        for (int k = 0; k < 10; ++k) {
            const Point p = random_point(rng, 3);
            const Point image = {evaluate(sigma[0], p), evaluate(sigma[1], p)};
            EXPECT_EQ(evaluate(s, p), evaluate(t, image));
        }
    }
}

TEST(Substitute, UnitImage) {
    const VLTerm t = parse_term("g0 + 2*one");
    const VLTerm s = substitute(t, {VLTerm::gen(0)}, VLTerm::gen(1));
    EXPECT_EQ(evaluate(s, {1, 3}), 7);
}

TEST(Substitute, PartialSubstitutionIsInputError) {
    EXPECT_THROW(substitute(parse_term("g0 + g1"), {VLTerm::gen(0)}), InputError);
}

TEST(ProvablyNonnegative, Patterns) {
    EXPECT_TRUE(provably_nonnegative(abs(VLTerm::gen(0))));
    EXPECT_TRUE(provably_nonnegative(pos(VLTerm::gen(0))));
    EXPECT_TRUE(provably_nonnegative(parse_term("|g0| + 3*g1^+")));
    EXPECT_FALSE(provably_nonnegative(VLTerm::gen(0)));
    EXPECT_FALSE(provably_nonnegative(parse_term("-|g0|")));
}

TEST(ProvablyNonnegative, SoundOnRandomTerms) {
    Rng rng(83);
    for (int i = 0; i < 300; ++i) {
        const VLTerm t = random_term(rng, 2, 3);
        if (!provably_nonnegative(t)) continue;
        for (int k = 0; k < 10; ++k) EXPECT_GE(evaluate(t, random_point(rng, 2)), 0) << format_term(t);
    }
}
