#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewchar/durfee_max.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/extremal.hpp"

#include <random>

using namespace skewchar;

namespace {

int oracle_max_durfee(const CharacterSum& sum) {
    int best = 0;
    for (const auto& [nu, m] : sum)
        best = std::max(best, oracle::durfee_by_squares(nu));
    return best;
}

void check_report_against(const DurfeeMaxReport& rep, const CharacterSum& sum) {
    CHECK(rep.max_durfee == oracle_max_durfee(sum));
    for (const DurfeeWitness& w : rep.witnesses) {
        CHECK(durfee(w.nu_inverse) == rep.max_durfee);
        CHECK(sum.multiplicity(w.nu_inverse) == w.mult);
    }
}

} // namespace

TEST_CASE("complement") {
    CHECK(complement(Partition{1}, 2, 2) == Partition{2, 1});
    CHECK(complement(Partition{9, 9, 9, 9, 5, 4, 3, 3, 3}, 9, 9) == Partition{6, 6, 6, 5, 4});
    CHECK(complement(Partition{}, 3, 2) == Partition{3, 3});
    CHECK(complement(Partition{3, 3}, 3, 2) == Partition{});
    CHECK_THROWS_AS(complement(Partition{3}, 2, 2), PreconditionError);
    CHECK_THROWS_AS(complement(Partition{1, 1, 1}, 2, 2), PreconditionError);

    std::mt19937 rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const Partition nu = oracle::random_partition(rng, 20, 6, 5);
        const Partition c = complement(nu, 6, 5);
        CHECK(complement(c, 6, 5) == nu);
        CHECK(nu.weight() + c.weight() == 30);
    }
}

TEST_CASE("associated diagram") {
    const AssociatedDiagram ad = associated_diagram(Partition{5, 5, 3, 3, 2}, Partition{4, 3, 1, 1});
    CHECK(ad.m == 9);
    CHECK(ad.diagram == SkewDiagram(Partition{9, 9, 9, 9, 7, 6, 6, 4, 4}, Partition{4, 3, 1, 1}));
    CHECK(ad.diagram.size() == 54);

    const AssociatedDiagram one = associated_diagram(Partition{1}, Partition{1});
    CHECK(one.m == 2);
    CHECK(one.diagram == SkewDiagram(Partition{2, 1}, Partition{1}));

    // complement((1), 1, 1) is empty, so the diagram has no boxes.
    const AssociatedDiagram single = associated_diagram(Partition{1}, Partition{});
    CHECK(single.m == 1);
    CHECK(single.diagram.empty());

    CHECK_THROWS_AS(associated_diagram(Partition{}, Partition{}), PreconditionError);
}

TEST_CASE("maximal Durfee size of products") {
    const Partition alpha{5, 5, 3, 3, 2}, beta{4, 3, 1, 1};
    const DurfeeMaxReport rep = max_durfee_product(alpha, beta);
    CHECK(rep.m == 9);
    CHECK(rep.max_durfee == 4);
    CHECK_FALSE(rep.exhaustive);
    REQUIRE(rep.witnesses.size() == 4);
    CHECK(rep.witnesses[0].nu_inverse == Partition{6, 6, 6, 5, 4});
    CHECK(rep.witnesses[0].mult == 1);
    CHECK(rep.witnesses[1].nu_inverse == Partition{6, 6, 5, 5, 4, 1});
    CHECK(rep.witnesses[1].mult == 3);
    CHECK(rep.witnesses[2].nu_inverse == Partition{6, 5, 5, 5, 4, 2});
    CHECK(rep.witnesses[2].mult == 3);
    CHECK(rep.witnesses[3].nu_inverse == Partition{5, 5, 5, 5, 4, 3});
    CHECK(rep.witnesses[3].mult == 1);
    for (const DurfeeWitness& w : rep.witnesses)
        CHECK(oracle::lr_by_definition(embed_disjoint(alpha, beta), w.nu_inverse) == w.mult);

    CHECK(max_durfee_product(Partition{1}, Partition{1}).max_durfee == 1);
    CHECK(max_durfee_product(Partition{2, 1}, Partition{2, 1}).max_durfee == 2);
    CHECK(max_durfee_product(Partition{1}, Partition{}).max_durfee == 1);

    const DurfeeMaxReport ex = max_durfee_product(Partition{2, 1}, Partition{2, 1}, true);
    CHECK(ex.exhaustive);
    check_report_against(ex, outer_product(Partition{2, 1}, Partition{2, 1}));
}

TEST_CASE("maximal Durfee size of special skew shapes") {
    CHECK(max_durfee_special_skew(SkewDiagram(Partition{2, 2}, Partition{1})).max_durfee == 1);
    CHECK(max_durfee_special_skew(SkewDiagram(Partition{3, 3, 2}, Partition{1, 1})).max_durfee == 2);
    for (int l = 1; l <= 4; ++l) {
        const SkewDiagram sq{Partition(std::vector<int>(static_cast<std::size_t>(l), l))};
        const DurfeeMaxReport rep = max_durfee_special_skew(sq);
        CHECK(rep.max_durfee == l);
        check_report_against(rep, decompose_skew(sq));
    }
    check_report_against(max_durfee_special_skew(SkewDiagram(Partition{3, 3, 2}, Partition{1, 1})),
                         decompose_skew(SkewDiagram(Partition{3, 3, 2}, Partition{1, 1})));

    CHECK_THROWS_AS(max_durfee_special_skew(SkewDiagram(Partition{3, 3}, Partition{1})), PreconditionError);
    CHECK_THROWS_AS(max_durfee_special_skew(SkewDiagram(Partition{3, 2, 2}, Partition{1, 1})), PreconditionError);
    CHECK_THROWS_AS(max_durfee_special_skew(SkewDiagram(Partition{3, 3, 1}, Partition{2})), PreconditionError);
    CHECK_THROWS_AS(max_durfee_special_skew(SkewDiagram()), PreconditionError);
}

TEST_CASE("complementation identity") {
    CHECK(verify_complementation(Partition{1}, Partition{2, 2}, 2, 2));
    CHECK(verify_complementation(Partition{}, Partition{3, 3}, 3, 2));
    CHECK(verify_complementation(Partition{1, 1}, Partition{3, 3, 2}, 3, 3));
    CHECK_THROWS_AS(verify_complementation(Partition{3}, Partition{2, 2}, 3, 3), PreconditionError);
    CHECK_THROWS_AS(verify_complementation(Partition{1}, Partition{4}, 3, 3), PreconditionError);
}

TEST_CASE("oracle checks on random products and special shapes") {
    std::mt19937 rng(12);
    for (int iter = 0; iter < 150; ++iter) {
        const Partition alpha = oracle::random_partition(rng, 6);
        const Partition beta = oracle::random_partition(rng, 6);
        if (alpha.empty() && beta.empty())
            continue;
        const DurfeeMaxReport rep = max_durfee_product(alpha, beta);
        check_report_against(rep, outer_product(alpha, beta));
        CHECK(min_durfee(embed_disjoint(alpha, beta)) <= rep.max_durfee);
    }

    // lambda = (l^k, tail), mu inside the first k rows and the last column.
    int tested = 0;
    for (int iter = 0; iter < 2000 && tested < 150; ++iter) {
        std::uniform_int_distribution<int> ldist(1, 5);
        const int l = ldist(rng);
        const Partition lambda = oracle::random_partition(rng, l * l, l, l);
        const Partition mu = oracle::random_partition(rng, 6, l, l);
        const SkewDiagram a(lambda, contains(mu, lambda) ? mu : Partition{});
        try {
            const DurfeeMaxReport rep = max_durfee_special_skew(a);
            check_report_against(rep, decompose_skew(a));
            ++tested;
        } catch (const PreconditionError&) {
        }
    }
    CHECK(tested >= 100);
}
