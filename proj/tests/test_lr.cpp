#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/lr.hpp"

#include <random>

using namespace skewchar;

namespace {

CharacterSum sum_of(int weight, std::initializer_list<std::pair<Partition, Multiplicity>> terms) {
    CharacterSum s(weight);
    for (const auto& [nu, m] : terms)
        s.add(nu, m);
    return s;
}

} // namespace

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_add(~Multiplicity{0}, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(Multiplicity{1} << 40, Multiplicity{1} << 40), OverflowError);
}

TEST_CASE("lattice words") {
    CHECK(is_lattice_word(std::vector<int>{1, 2, 1}));
    CHECK_FALSE(is_lattice_word(std::vector<int>{2}));
    CHECK_FALSE(is_lattice_word(std::vector<int>{1, 2, 2}));
    CHECK(is_lattice_word(std::vector<int>{}));
    CHECK(is_lattice_word(std::vector<int>{1, 1, 2, 3, 2}));
}

TEST_CASE("enumerate LR fillings") {
    const SkewDiagram shape(Partition{3, 2, 1}, Partition{2, 1});
    const auto tabs = enumerate_lr_fillings(shape, Partition{2, 1});
    CHECK(tabs.size() == 2);
    CHECK(oracle::lr_by_definition(shape, Partition{2, 1}) == 2);
    for (const LRTableau& t : tabs) {
        CHECK(is_lattice_word(t.reverse_row_word()));
        for (Box b : shape.boxes()) {
            if (shape.contains({b.row, b.col + 1}))
                CHECK(t.at(b) <= t.at({b.row, b.col + 1}));
            if (shape.contains({b.row + 1, b.col}))
                CHECK(t.at(b) < t.at({b.row + 1, b.col}));
        }
    }
    // Smallest entry first: the top-row box gets 1, then row 2 is 1 or 2.
    CHECK(tabs[0].at({2, 2}) == 1);
    CHECK(tabs[1].at({2, 2}) == 2);

    const SkewDiagram empty(Partition{3, 1}, Partition{3, 1});
    CHECK(enumerate_lr_fillings(empty, Partition{}).size() == 1);

    CHECK(enumerate_lr_fillings(SkewDiagram(Partition{2, 2}, Partition{1}), Partition{1, 1, 1}).empty());
    CHECK_THROWS_AS(enumerate_lr_fillings(shape, Partition{2}), PreconditionError);
    CHECK_THROWS_AS(tabs[0].at({1, 1}), std::out_of_range);
}

TEST_CASE("LR coefficients") {
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(lr_coefficient(Partition{4, 2, 1}, Partition{4, 2, 1}, Partition{}) == 1);
    CHECK(lr_coefficient(Partition{8, 8, 7, 4, 3, 3}, Partition{4, 3, 2}, Partition{8, 7, 4, 2, 2, 1}) == 2);
    CHECK(oracle::lr_by_definition(SkewDiagram(Partition{8, 8, 7, 4, 3, 3}, Partition{4, 3, 2}),
                                   Partition{8, 7, 4, 2, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{3}, Partition{1}) == 0);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{1}, Partition{1}) == 0);
}

TEST_CASE("decompose_skew") {
    CHECK(decompose_skew(SkewDiagram(Partition{2, 2}, Partition{1})) == sum_of(3, {{Partition{2, 1}, 1}}));

    const SkewDiagram a_tilde(Partition{4, 4, 4, 4, 3, 3}, Partition{3, 3, 3, 3});
    const CharacterSum ta = decompose_skew(a_tilde);
    CHECK(ta == sum_of(10, {{Partition{4, 4, 1, 1}, 1}, {Partition{4, 3, 1, 1, 1}, 1}, {Partition{3, 3, 1, 1, 1, 1}, 1}}));

    const SkewDiagram b_tilde(Partition{4, 4, 2, 2, 1, 1}, Partition{1, 1, 1, 1});
    const CharacterSum tb = decompose_skew(b_tilde);
    CHECK(tb == sum_of(10, {{Partition{4, 4, 1, 1}, 1},
                            {Partition{4, 3, 1, 1, 1}, 1},
                            {Partition{3, 3, 1, 1, 1, 1}, 1},
                            {Partition{4, 3, 2, 1}, 1},
                            {Partition{3, 3, 2, 2}, 1},
                            {Partition{3, 3, 2, 1, 1}, 1}}));
    CHECK(oracle::kostka_consistent(a_tilde, ta));
    CHECK(oracle::kostka_consistent(b_tilde, tb));

    // Iteration order is lexicographically descending.
    Partition prev{100};
    for (const auto& [nu, m] : tb) {
        CHECK(nu < prev);
        prev = nu;
    }

    const CharacterSum e = decompose_skew(SkewDiagram());
    CHECK(e == sum_of(0, {{Partition{}, 1}}));
}

TEST_CASE("outer and restricted products") {
    CHECK(outer_product(Partition{1}, Partition{2, 2}) == sum_of(5, {{Partition{3, 2}, 1}, {Partition{2, 2, 1}, 1}}));
    CHECK(outer_product(Partition{1}, Partition{1}) == sum_of(2, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));

    const CharacterSum p = outer_product(Partition{3, 2}, Partition{4, 2});
    CHECK(p.size() == 18);
    for (const Partition& nu : {Partition{7, 3, 1}, Partition{7, 2, 2}, Partition{6, 3, 1, 1}, Partition{6, 2, 2, 1}})
        CHECK(p.multiplicity(nu) == 1);

    CHECK(schubert_product(Partition{1}, Partition{1}, 1, 2) == sum_of(2, {{Partition{1, 1}, 1}}));
    CHECK(schubert_product(Partition{1}, Partition{1}, 2, 2) == sum_of(2, {{Partition{2}, 1}, {Partition{1, 1}, 1}}));
    CHECK(outer_product(Partition{2}, Partition{2}) ==
          sum_of(4, {{Partition{4}, 1}, {Partition{3, 1}, 1}, {Partition{2, 2}, 1}}));
    CHECK(schubert_product(Partition{2}, Partition{2}, 2, 2) == sum_of(4, {{Partition{2, 2}, 1}}));
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(5, 5, 5).size() == 7);
    CHECK(partitions_of(5, 2, 5).size() == 3);
    CHECK(partitions_of(0, 3, 3).size() == 1);
    CHECK(partitions_of(4, 4, 4) == oracle::partitions(4));
}

TEST_CASE("LR laws on random instances") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 150; ++iter) {
        const SkewDiagram a = oracle::random_skew(rng, 9);
        const CharacterSum sum = decompose_skew(a);
        CHECK(oracle::kostka_consistent(a, sum));
        for (const auto& [nu, m] : sum) {
            CHECK(nu.weight() == a.size());
            CHECK(m == oracle::lr_by_definition(a, nu));
            CHECK(lr_coefficient(a.outer(), nu, a.inner()) == m);
        }
        CHECK(decompose_skew(rotate180(a)) == sum);
        CHECK(decompose_skew(normalize(a)) == sum);

        const Partition alpha = oracle::random_partition(rng, 5);
        const Partition beta = oracle::random_partition(rng, 5);
        const CharacterSum prod = outer_product(alpha, beta);
        CHECK(prod == outer_product(beta, alpha));
        CHECK(prod == decompose_skew(embed_disjoint(alpha, beta)));
        CHECK(schubert_product(alpha, beta, alpha[0] + beta[0], static_cast<int>(alpha.length() + beta.length())) ==
              prod);
    }
}
