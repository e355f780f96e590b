#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewchar/equality.hpp"
#include "skewchar/ribbons.hpp"

#include <random>

using namespace skewchar;

namespace {

const SkewDiagram kExampleA(Partition{10, 10, 8, 8, 8, 8, 5, 5}, Partition{5, 5, 5, 5});
const SkewDiagram kExampleB(Partition{10, 10, 10, 10, 8, 8, 3, 3}, Partition{5, 5, 5, 5});

} // namespace

TEST_CASE("identical diagrams pass at every level") {
    const EqualityReport rep = necessary_conditions(kExampleA, kExampleA);
    CHECK(rep.verdict.pass);
    CHECK(rep.levels.size() == 5);
    for (const LevelRecord& r : rep.levels)
        CHECK((r.pi_nw_equal && r.k_equal && r.armleg_equal));
    CHECK(full_equality(kExampleA, kExampleA).equal);
}

TEST_CASE("the 62-box pair passes structurally but differs") {
    const EqualityReport rep = necessary_conditions(kExampleA, kExampleB);
    CHECK(rep.verdict.pass);
    REQUIRE(rep.levels.size() == 5);
    for (int t = 0; t < 5; ++t) {
        CHECK(rep.levels[static_cast<std::size_t>(t)].level == t);
        CHECK(rep.levels[static_cast<std::size_t>(t)].pi_nw_equal);
        CHECK(rep.levels[static_cast<std::size_t>(t)].k_equal);
        CHECK(rep.levels[static_cast<std::size_t>(t)].armleg_equal);
    }

    const FullCheck full = full_equality(kExampleA, kExampleB);
    CHECK_FALSE(full.equal);
    REQUIRE(full.first_discrepancy.has_value());
    CHECK(full.first_discrepancy->mult_a != full.first_discrepancy->mult_b);

    // After stripping two ribbons the difference is visible by hand.
    const FullCheck stripped = full_equality(strip_nw_ribbons(kExampleA, 2), strip_nw_ribbons(kExampleB, 2));
    CHECK_FALSE(stripped.equal);
    REQUIRE(stripped.first_discrepancy.has_value());
    CHECK(stripped.first_discrepancy->nu == Partition{4, 3, 2, 1});
    CHECK(stripped.first_discrepancy->mult_a == 0);
    CHECK(stripped.first_discrepancy->mult_b == 1);
}

TEST_CASE("row versus column fails on arms and legs") {
    const EqualityReport rep = necessary_conditions(SkewDiagram(Partition{2}), SkewDiagram(Partition{1, 1}));
    CHECK_FALSE(rep.verdict.pass);
    CHECK(rep.verdict.level == 0);
    CHECK(rep.verdict.condition == 3);
    CHECK(rep.levels[0].pi_nw_equal);
    CHECK(rep.levels[0].k_equal);
    CHECK_FALSE(rep.levels[0].armleg_equal);
}

TEST_CASE("different pi_nw fails on condition 1") {
    const EqualityReport rep = necessary_conditions(SkewDiagram(Partition{2, 2}), SkewDiagram(Partition{3, 1}));
    CHECK_FALSE(rep.verdict.pass);
    CHECK(rep.verdict.level == 0);
    CHECK(rep.verdict.condition == 1);
}

TEST_CASE("rotations and translations are equal") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 60; ++iter) {
        const SkewDiagram a = oracle::random_skew(rng, 12);
        CHECK(full_equality(a, rotate180(a)).equal);
        CHECK(full_equality(a, normalize(a)).equal);
        CHECK(necessary_conditions(a, normalize(a)).verdict.pass);
    }
}

TEST_CASE("soundness and symmetry on random pairs") {
    std::mt19937 rng(2718);
    int equal_pairs = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const SkewDiagram a = oracle::random_skew(rng, 8);
        // Half the time compare against a rotation of a diagram of equal
        // size, so equal pairs actually occur.
        const SkewDiagram b = (iter % 2 == 0) ? rotate180(a) : oracle::random_skew(rng, 8);
        const FullCheck full = full_equality(a, b);
        const EqualityReport rep = necessary_conditions(a, b);
        if (full.equal) {
            ++equal_pairs;
            CHECK(rep.verdict.pass);
        }
        CHECK(full_equality(b, a).equal == full.equal);
        const EqualityReport rev = necessary_conditions(b, a);
        CHECK(rev.verdict.pass == rep.verdict.pass);
        CHECK(rev.verdict.level == rep.verdict.level);
        CHECK(rev.verdict.condition == rep.verdict.condition);
    }
    CHECK(equal_pairs >= 200);
}
