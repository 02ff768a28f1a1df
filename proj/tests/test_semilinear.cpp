#include <gtest/gtest.h>

#include "devlat/io.hpp"
#include "devlat/semilinear.hpp"
#include "support/generators.hpp"

using namespace devlat;
using namespace devlat::testing;

namespace {

SemilinearSet set(std::size_t n, std::initializer_list<std::initializer_list<const char*>> cells) {
    SemilinearSet s = SemilinearSet::empty(n);
    for (const auto& cell : cells) {
        Cell c;
        for (const char* a : cell) c.atoms.push_back(parse_atom(a, n));
        s.cells.push_back(std::move(c));
    }
    return s;
}

SemilinearSet fixture(const std::string& name) {
    return semilinear_from_json(read_json_file(std::string(DEVLAT_TEST_DATA) + "/" + name));
}

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

// Grid over [-4, 4]^n with step 1/4, n <= 2.
std::vector<Point> grid(std::size_t n) {
    std::vector<Point> out;
    std::vector<Rational> axis;
    for (int k = -16; k <= 16; ++k) axis.push_back(ratio(k, 4));
    if (n == 1) {
        for (const auto& a : axis) out.push_back({a});
    } else {
        for (const auto& a : axis) {
            for (const auto& b : axis) out.push_back({a, b});
        }
    }
    return out;
}

} // namespace

TEST(Emptiness, StrictContradiction) {
    EXPECT_TRUE(is_empty(set(1, {{"x0 > 0", "x0 < 0"}})));
    EXPECT_TRUE(is_empty(set(1, {{"x0 > 0", "x0 <= 0"}})));
    EXPECT_TRUE(is_empty(SemilinearSet::empty(3)));
}

TEST(Emptiness, ClosedPointIsFound) {
    const SemilinearSet s = set(1, {{"x0 >= 0", "x0 <= 0"}});
    const auto w = witness_point(s);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ((*w)[0], 0);
}

TEST(Emptiness, OpenStripHasRationalPoint) {
    const SemilinearSet s = set(2, {{"x0 > 1/3", "x0 < 1/2", "x1 = 2*x0"}});
    const auto w = witness_point(s);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(s.contains(*w));
}

TEST(Emptiness, WitnessesLieInRandomSets) {
    Rng rng(51);
    for (int i = 0; i < 300; ++i) {
        const SemilinearSet s = random_set(rng, uniform(rng, 1, 3));
        const auto w = witness_point(s);
        if (w) {
            EXPECT_TRUE(s.contains(*w));
        } else {
            for (int k = 0; k < 30; ++k) EXPECT_FALSE(s.contains(random_point(rng, s.dimension)));
        }
    }
}

TEST(Eliminate, TriangleProjectsToHalfLine) {
    const SemilinearSet s = set(2, {{"x0 > 0", "x1 > x0"}});
    const SemilinearSet e = eliminate(s, {0});
    EXPECT_TRUE(equivalent(e, set(2, {{"x1 > 0"}})));
    EXPECT_TRUE(mentions_only(e, {1}));
}

TEST(Eliminate, EqualityIsSubstituted) {
    const SemilinearSet s = set(2, {{"x1 = x0 + 1", "x0 >= 0"}});
    EXPECT_TRUE(equivalent(eliminate(s, {0}), set(2, {{"x1 >= 1"}})));
}

TEST(Eliminate, OutOfRangeIsInputError) { EXPECT_THROW(eliminate(SemilinearSet::whole(2), {2}), InputError); }

// Exact oracle: a point survives elimination of x1 iff the slice at its x0
// meets the set.
TEST(Eliminate, AgreesWithSliceOracleOnGrid) {
    Rng rng(53);
    for (int i = 0; i < 40; ++i) {
        const SemilinearSet s = random_set(rng, 2);
        const SemilinearSet e = eliminate(s, {1});
        for (int k = -8; k <= 8; ++k) {
            const Rational a = ratio(k, 2);
            SemilinearSet slice = SemilinearSet::empty(2);
            for (Cell c : s.cells) {
                c.atoms.push_back({LinearForm::variable(2, 0) - LinearForm::constant_form(2, a), Rel::eq});
                slice.cells.push_back(std::move(c));
            }
            EXPECT_EQ(e.contains(pt({a, 0})), !is_empty(slice)) << "x0 = " << a.get_str();
        }
    }
}

TEST(Complement, OfQuadrant) {
    const SemilinearSet q = fixture("quadrant.json");
    const SemilinearSet c = complement(q);
    EXPECT_TRUE(c.contains(pt({0, 0})));
    EXPECT_TRUE(c.contains(pt({1, -1})));
    EXPECT_FALSE(c.contains(pt({1, 1})));
}

TEST(Complement, OfEmptyAndWhole) {
    EXPECT_TRUE(equivalent(complement(SemilinearSet::empty(2)), SemilinearSet::whole(2)));
    EXPECT_TRUE(is_empty(complement(SemilinearSet::whole(2))));
}

TEST(Complement, DisjointPiecesAndGridOracle) {
    Rng rng(57);
    for (int i = 0; i < 60; ++i) {
        const SemilinearSet s = random_set(rng, 2);
        const SemilinearSet c = complement(s);
        for (const Point& p : grid(2)) {
            ASSERT_NE(s.contains(p), c.contains(p));
            std::size_t hits = 0;
            for (const Cell& cell : c.cells) hits += cell.contains(p);
            EXPECT_LE(hits, 1u);
        }
        EXPECT_TRUE(equivalent(complement(c), s));
    }
}

TEST(Difference, SamplingOracle) {
    Rng rng(59);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = uniform(rng, 1, 3);
        const SemilinearSet t = random_set(rng, n);
        const SemilinearSet s = random_set(rng, n);
        const SemilinearSet d = difference(t, s);
        for (int k = 0; k < 50; ++k) {
            const Point p = random_point(rng, n);
            EXPECT_EQ(d.contains(p), t.contains(p) && !s.contains(p));
        }
    }
}

TEST(Includes, QuadrantInHalfPlane) {
    const SemilinearSet q = fixture("quadrant.json");
    const SemilinearSet h = fixture("halfplane.json");
    EXPECT_TRUE(includes(h, q).holds);
    const InclusionResult r = includes(q, h);
    ASSERT_FALSE(r.holds);
    EXPECT_TRUE(h.contains(*r.witness));
    EXPECT_FALSE(q.contains(*r.witness));
}

TEST(Includes, DimensionMismatchIsInputError) {
    EXPECT_THROW(includes(SemilinearSet::whole(1), SemilinearSet::whole(2)), InputError);
}

TEST(Includes, UnionOfHalfPlanesCoversPlaneMinusLine) {
    const SemilinearSet halves = set(2, {{"x0 > 0"}, {"x0 < 0"}});
    EXPECT_TRUE(includes(halves, set(2, {{"x0 > 0", "x1 > 0"}, {"x0 < -1"}})).holds);
    const InclusionResult r = includes(halves, SemilinearSet::whole(2));
    ASSERT_FALSE(r.holds);
    EXPECT_EQ((*r.witness)[0], 0);
}

TEST(Shadows, QuadrantOverFirstCoordinate) {
    const SemilinearSet q = fixture("quadrant.json");
    EXPECT_TRUE(equivalent(upper_shadow(q, {0}), set(2, {{"x0 > 0"}})));
    EXPECT_TRUE(is_empty(lower_shadow(q, {0})));
    EXPECT_FALSE(definable_over(q, {0}));
}

TEST(Shadows, HalfPlaneIsDefinableOverFirstCoordinate) {
    const SemilinearSet h = fixture("halfplane.json");
    EXPECT_TRUE(equivalent(upper_shadow(h, {0}), h));
    EXPECT_TRUE(equivalent(lower_shadow(h, {0}), h));
    EXPECT_TRUE(definable_over(h, {0}));
}

TEST(Shadows, SandwichOnRandomSets) {
    Rng rng(61);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = uniform(rng, 1, 3);
        const SemilinearSet u = random_set(rng, n);
        const IndexSet x = random_index_set(rng, n);
        const SemilinearSet up = upper_shadow(u, x);
        const SemilinearSet low = lower_shadow(u, x);
        EXPECT_TRUE(includes(up, u).holds);
        EXPECT_TRUE(includes(u, low).holds);
        EXPECT_TRUE(definable_over(up, x));
        EXPECT_TRUE(definable_over(low, x));
    }
}

TEST(Shadows, UnsortedIndexSetIsInputError) {
    EXPECT_THROW(upper_shadow(SemilinearSet::whole(2), {1, 0}), InputError);
    EXPECT_THROW(lower_shadow(SemilinearSet::whole(2), {0, 0}), InputError);
}

TEST(Interpolant, BetweenDefinableSets) {
    const SemilinearSet u = set(2, {{"x0 > 1"}});
    const SemilinearSet v = set(2, {{"x0 > 0"}, {"x1 > 0"}});
    const SemilinearSet w = interpolant(u, {0}, v, {0, 1});
    EXPECT_TRUE(mentions_only(w, {0}));
    EXPECT_TRUE(includes(w, u).holds);
    EXPECT_TRUE(includes(v, w).holds);
}

TEST(Interpolant, ContractViolations) {
    const SemilinearSet u = set(2, {{"x0 > 0"}});
    const SemilinearSet v = set(2, {{"x0 > 1"}});
    EXPECT_THROW(interpolant(u, {0}, v, {0}), ContractError);
    const SemilinearSet q = set(2, {{"x0 > 0", "x1 > 0"}});
    EXPECT_THROW(interpolant(q, {0}, SemilinearSet::whole(2), {0, 1}), ContractError);
}

TEST(Interpolant, RandomDefinablePairs) {
    Rng rng(67);
    for (int i = 0; i < 30; ++i) {
        const SemilinearSet c = random_set_over(rng, 3, {1});
        const SemilinearSet u = intersect(c, random_set_over(rng, 3, {0, 1}));
        const SemilinearSet v = unite(c, random_set_over(rng, 3, {1, 2}));
        const SemilinearSet w = interpolant(u, {0, 1}, v, {1, 2});
        EXPECT_TRUE(mentions_only(w, {1}));
        EXPECT_TRUE(includes(w, u).holds);
        EXPECT_TRUE(includes(v, w).holds);
    }
}

TEST(OpForm, ProperSets) {
    EXPECT_TRUE(is_proper(set(2, {{"x0 > 0"}, {"x1 - x0 > 0"}})));
    EXPECT_FALSE(is_proper(SemilinearSet::whole(2)));
    EXPECT_FALSE(is_op_form(set(2, {{"x0 >= 0"}})));
    EXPECT_FALSE(is_op_form(set(2, {{"x0 > 1"}})));
    EXPECT_TRUE(is_proper(SemilinearSet::empty(2)));
}

TEST(TextFormat, ParsesRelations) {
    const Atom a = parse_atom("2*x0 - 1/2 <= x1", 2);
    EXPECT_EQ(a.rel, Rel::ge);
    EXPECT_EQ(format_atom(a), "-2*x0 + x1 + 1/2 >= 0");
    EXPECT_EQ(parse_atom("x0 = 3", 1).rel, Rel::eq);
    EXPECT_EQ(format_atom(parse_atom("0 < 1", 1)), "1 > 0");
}

TEST(TextFormat, MalformedAtomsAreInputErrors) {
    EXPECT_THROW(parse_atom("x0 + ", 1), InputError);
    EXPECT_THROW(parse_atom("x0 + 1", 1), InputError);
    EXPECT_THROW(parse_atom("x3 > 0", 2), InputError);
    EXPECT_THROW(parse_atom("x0 > 1/0", 1), InputError);
}

TEST(TextFormat, RoundTripOnRandomAtoms) {
    Rng rng(71);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = uniform(rng, 1, 4);
        IndexSet all;
        for (std::size_t k = 0; k < n; ++k) all.push_back(k);
        const Atom a = random_atom(rng, n, all);
        EXPECT_EQ(parse_atom(format_atom(a), n), a) << format_atom(a);
    }
}

TEST(Limits, CellCeilingRaisesResourceError) {
    SemilinearSet s = SemilinearSet::empty(2);
    for (int k = 0; k < 6; ++k) {
        s.cells.push_back(set(2, {{"x0 > 0", "x1 > 0"}}).cells[0]);
        s.cells.back().atoms[0].form.constant = k;
        s.cells.back().atoms[1].form.coeffs[0] = k;
    }
    EXPECT_THROW(complement(s, Limits{3, 10000}), ResourceError);
    EXPECT_NO_THROW(complement(s));
}
