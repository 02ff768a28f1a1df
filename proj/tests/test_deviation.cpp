#include <gtest/gtest.h>

#include "devlat/deviation.hpp"
#include "devlat/io.hpp"
#include "support/generators.hpp"

using namespace devlat;
using namespace devlat::testing;

namespace {

std::string data(const std::string& name) { return std::string(DEVLAT_TEST_DATA) + "/" + name; }

FiniteDistributiveLattice chain(std::size_t n) {
    return FiniteDistributiveLattice::from_order(FinitePoset::chain(numbered_ids(n, "c")));
}

// d(x, y) = 0 when x <= y, otherwise x.
BinaryMap chain_deviation(const FiniteDistributiveLattice& d) {
    BinaryMap m(d.size(), d.bottom());
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            if (!d.leq(x, y)) m.at(x, y) = x;
        }
    }
    return m;
}

} // namespace

TEST(CheckDeviation, BooleanSquareDifference) {
    const auto d = lattice_from_json(read_json_file(data("square.json")));
    const BinaryMap m = map_from_json(d.carrier(), d, read_json_file(data("square_boolean_dev.json")));
    const auto r = check_deviation(d, m);
    ASSERT_TRUE(std::holds_alternative<DeviationTable>(r));
    const PropertyReport p = deviation_properties(d, std::get<DeviationTable>(r));
    EXPECT_TRUE(p.left_isotone);
    EXPECT_TRUE(p.right_antitone);
    EXPECT_TRUE(p.monotone);
    EXPECT_TRUE(p.cevian);
}

TEST(CheckDeviation, ZeroMapOnTwoChainFailsFirstAxiom) {
    const auto d = chain(2);
    const auto r = check_deviation(d, BinaryMap(2, 0));
    ASSERT_TRUE(std::holds_alternative<DeviationViolation>(r));
    const auto v = std::get<DeviationViolation>(r);
    EXPECT_EQ(v.axiom, 1);
    EXPECT_EQ(v.x, 1u);
    EXPECT_EQ(v.y, 0u);
}

TEST(CheckDeviation, ProjectionFailsSecondAxiom) {
    const auto d = chain(2);
    BinaryMap m(2, 0);
    for (Element x = 0; x < 2; ++x) {
        for (Element y = 0; y < 2; ++y) m.at(x, y) = x;
    }
    const auto r = check_deviation(d, m);
    ASSERT_TRUE(std::holds_alternative<DeviationViolation>(r));
    EXPECT_EQ(std::get<DeviationViolation>(r).axiom, 2);
    EXPECT_EQ(std::get<DeviationViolation>(r).x, 1u);
    EXPECT_EQ(std::get<DeviationViolation>(r).y, 1u);
}

TEST(CheckDeviation, ValueOutsideCarrierIsInputError) {
    const auto d = chain(2);
    BinaryMap m(2, 0);
    m.at(1, 0) = 7;
    EXPECT_THROW(check_deviation(d, m), InputError);
    EXPECT_THROW(check_deviation(d, BinaryMap(3, 0)), InputError);
}

TEST(DeviationProperties, FourChainRightAntitoneFailure) {
    const auto d = lattice_from_json(read_json_file(data("chain4.json")));
    const BinaryMap m = map_from_json(d.carrier(), d, read_json_file(data("dev.json")));
    ASSERT_TRUE(is_deviation(d, m));
    const PropertyReport p = map_properties(d, m);
    EXPECT_TRUE(p.left_isotone);
    ASSERT_FALSE(p.right_antitone);
    EXPECT_FALSE(p.monotone);
    const auto& c = d.carrier();
    EXPECT_EQ(c.id(p.right_antitone.counterexample[0]), "b");
    EXPECT_EQ(c.id(p.right_antitone.counterexample[1]), "0");
    EXPECT_EQ(c.id(p.right_antitone.counterexample[2]), "a");
}

TEST(DeviationProperties, OnePointLattice) {
    const auto d = chain(1);
    const auto all = enumerate_deviations(d, 10);
    ASSERT_EQ(all.size(), 1u);
    const PropertyReport p = deviation_properties(d, all[0]);
    EXPECT_TRUE(p.monotone);
    EXPECT_TRUE(p.cevian);
}

TEST(SearchDeviation, SquareHasOne) {
    const auto d = lattice_from_json(read_json_file(data("square.json")));
    EXPECT_TRUE(search_deviation(d).has_value());
}

TEST(SearchDeviation, NoneOnFiveElementLattice) {
    const auto d = lattice_from_json(read_json_file(data("five_element_ncn.json")));
    EXPECT_FALSE(search_deviation(d).has_value());
    EXPECT_TRUE(enumerate_deviations(d, 5).empty());
}

TEST(SearchDeviation, ChainsWithAllConstraints) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto d = chain(n);
        const auto found = search_deviation(d, {true, true, std::nullopt});
        ASSERT_TRUE(found.has_value());
        const PropertyReport p = deviation_properties(d, *found);
        EXPECT_TRUE(p.monotone);
        EXPECT_TRUE(p.cevian);
        EXPECT_TRUE(is_deviation(d, chain_deviation(d)));
    }
}

TEST(EnumerateDeviations, TwoChainHasOne) {
    const auto all = enumerate_deviations(chain(2), 10);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0](1, 0), 1u);
    EXPECT_EQ(all[0](0, 1), 0u);
}

TEST(EnumerateDeviations, ThreeChainHasTwo) {
    const auto d = chain(3);
    const auto all = enumerate_deviations(d, 10);
    ASSERT_EQ(all.size(), 2u);
    // They differ exactly at (m, 0), which takes m or 1.
    EXPECT_EQ(all[0](1, 0), 1u);
    EXPECT_EQ(all[1](1, 0), 2u);
    EXPECT_EQ(all[0](2, 1), 2u);
    EXPECT_EQ(all[0](2, 0), 2u);
}

TEST(EnumerateDeviations, DistinctAndDeterministic) {
    const auto d = lattice_from_json(read_json_file(data("square.json")));
    const auto a = enumerate_deviations(d, 50);
    const auto b = enumerate_deviations(d, 50);
    EXPECT_EQ(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) EXPECT_FALSE(a[i] == a[j]);
    }
}

namespace {

// Axiom 2 only couples (x, y) with (y, x), so the number of deviations is
// a product over unordered pairs.
std::size_t count_deviations(const FiniteDistributiveLattice& d) {
    std::size_t count = 1;
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = x + 1; y < d.size(); ++y) {
            std::size_t options = 0;
            for (Element u = 0; u < d.size(); ++u) {
                for (Element v = 0; v < d.size(); ++v) {
                    options += d.leq(x, d.join(y, u)) && d.leq(y, d.join(x, v)) && d.meet(u, v) == d.bottom();
                }
            }
            count *= options;
        }
    }
    return count;
}

} // namespace

TEST(EnumerateDeviations, MatchesPairwiseCount) {
    for (const FinitePoset& j : small_posets(3)) {
        const auto d = lattice_from_downsets(j);
        if (count_deviations(d) > 100000) continue;
        EXPECT_EQ(enumerate_deviations(d, 1000000).size(), count_deviations(d)) << "lattice of size " << d.size();
    }
}

TEST(SearchDeviation, ExistsIffCompletelyNormal) {
    for (const FinitePoset& j : small_posets(4)) {
        const auto d = lattice_from_downsets(j);
        EXPECT_EQ(search_deviation(d).has_value(), is_completely_normal(d).holds);
    }
}

TEST(SearchDeviation, MonotoneExistsOnNormalLatticesUpToSix) {
    for (const FinitePoset& j : small_posets(3)) {
        const auto d = lattice_from_downsets(j);
        if (d.size() > 6 || !is_completely_normal(d)) continue;
        const auto found = search_deviation(d, {true, false, std::nullopt});
        ASSERT_TRUE(found.has_value());
        EXPECT_TRUE(deviation_properties(d, *found).monotone);
    }
}

TEST(SearchDeviation, SomeSmallLatticeHasNonMonotoneDeviation) {
    const auto d = lattice_from_json(read_json_file(data("chain4.json")));
    bool seen = false;
    for (const auto& t : enumerate_deviations(d, 1000)) seen = seen || !deviation_properties(d, t).monotone;
    EXPECT_TRUE(seen);
}

TEST(SearchDeviation, ShuffledSearchStillVerified) {
    Rng rng(1);
    for (int i = 0; i < 30; ++i) {
        const auto d = random_lattice(rng, 4);
        if (!is_completely_normal(d)) continue;
        const auto found = search_deviation(d, {false, false, rng()});
        ASSERT_TRUE(found.has_value());
        EXPECT_TRUE(is_deviation(d, found->map()));
    }
}

TEST(SearchDeviation, CevianConstraintHonoured) {
    const auto d = lattice_from_json(read_json_file(data("square.json")));
    const auto found = search_deviation(d, {false, true, std::nullopt});
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(deviation_properties(d, *found).cevian);
}
