#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/ribbons.hpp"

#include <random>

using namespace skewchar;

namespace {

const SkewDiagram kExampleA(Partition{10, 10, 8, 8, 8, 8, 5, 5}, Partition{5, 5, 5, 5});
const SkewDiagram kExampleB(Partition{10, 10, 10, 10, 8, 8, 3, 3}, Partition{5, 5, 5, 5});
const SkewDiagram kThreeRibbons(Partition{8, 8, 7, 4, 3, 3}, Partition{4, 3, 2});

// Labels row by row, as usually drawn (inner boxes omitted).
std::vector<std::string> label_rows(const SkewDiagram& a) {
    const RibbonLabeling lab = nw_labeling(a);
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < a.outer().length(); ++r) {
        std::string s;
        for (int c = a.inner()[r] + 1; c <= a.outer()[r]; ++c)
            s += std::to_string(lab.label({static_cast<int>(r) + 1, c}));
        rows.push_back(s);
    }
    return rows;
}

void check_labeling_invariants(const SkewDiagram& a) {
    const RibbonLabeling lab = nw_labeling(a);
    for (Box b : a.boxes()) {
        const Box nw{b.row - 1, b.col - 1};
        const int h = lab.label(b);
        CHECK((h == 1) == !a.contains(nw));
        if (h > 1)
            CHECK(h == lab.label(nw) + 1);
        const Box se{b.row + 1, b.col + 1};
        if (a.contains(se))
            CHECK(lab.label(se) == h + 1);
    }
    CHECK(lab.pi_nw().weight() == a.size());
    for (const RibbonProfile& p : lab.profiles()) {
        CHECK(p.size == p.arm + p.leg + p.k);
        CHECK(p.k >= 1);
    }
}

} // namespace

TEST_CASE("northwest labels of the 62-box pair") {
    CHECK(label_rows(kExampleA) == std::vector<std::string>{"11111", "12222", "123", "123", "11111123", "12222223",
                                                            "12333", "12344"});
    CHECK(label_rows(kExampleB) == std::vector<std::string>{"11111", "12222", "12333", "12344", "11111123", "12222223",
                                                            "123", "123"});
    for (const SkewDiagram& a : {kExampleA, kExampleB}) {
        CHECK(pi_nw(a) == Partition{17, 15, 8, 2});
        CHECK(ribbon_profile(a, 3).k == 2);
        check_labeling_invariants(a);
    }
}

TEST_CASE("labels of a partition are its principal hooks") {
    const Partition lambda{5, 5, 4, 4, 3, 1};
    CHECK(pi_nw(SkewDiagram(lambda)) == principal_hook_lengths(lambda));
    const RibbonLabeling lab = nw_labeling(SkewDiagram(lambda));
    for (Box b : SkewDiagram(lambda).boxes())
        CHECK(lab.label(b) == std::min(b.row, b.col));
}

TEST_CASE("k-profile of (8^2,7,4,3^2)/(4,3,2)") {
    CHECK(label_rows(kThreeRibbons) == std::vector<std::string>{"1111", "11222", "11223", "1112", "122", "123"});
    const RibbonLabeling lab = nw_labeling(kThreeRibbons);
    REQUIRE(lab.profiles().size() == 3);
    CHECK(lab.profiles()[0].k == 1);
    CHECK(lab.profiles()[1].k == 3);
    CHECK(lab.profiles()[2].k == 2);
}

TEST_CASE("pi_nw small cases") {
    CHECK(pi_nw(SkewDiagram()) == Partition{});
    CHECK(pi_nw(SkewDiagram(Partition{2, 2}, Partition{1})) == Partition{3});
}

TEST_CASE("ribbon profiles") {
    const RibbonProfile p = ribbon_profile(SkewDiagram(Partition{2, 2}, Partition{1}), 1);
    CHECK(p.arm == 1);
    CHECK(p.leg == 1);
    CHECK(p.k == 1);
    CHECK(p.size == 3);

    // Hook (4,1,1,1): arm 3, leg 3.
    const RibbonProfile h = ribbon_profile(SkewDiagram(Partition{4, 1, 1, 1}), 1);
    CHECK(h.arm == 3);
    CHECK(h.leg == 3);
    CHECK(h.k == 1);

    CHECK_THROWS_AS(ribbon_profile(SkewDiagram(Partition{2, 2}, Partition{1}), 2), std::out_of_range);
    CHECK_THROWS_AS(ribbon_profile(SkewDiagram(Partition{2, 2}, Partition{1}), 0), std::out_of_range);
}

TEST_CASE("stripping northwest ribbons") {
    CHECK(strip_nw_ribbons(kThreeRibbons, 1) == SkewDiagram(Partition{7, 6, 3, 2, 2}, Partition{4, 3, 2}));
    const Partition lambda{5, 5, 4, 4, 3, 1};
    CHECK(strip_nw_ribbons(SkewDiagram(lambda), 1) == SkewDiagram(first_hook_strip(lambda)));
    CHECK(strip_nw_ribbons(kExampleA, 4) == SkewDiagram());
    CHECK(strip_nw_ribbons(kExampleA, 0) == normalize(kExampleA));
    CHECK(strip_nw_ribbons(kExampleA, 3) == SkewDiagram(Partition{2}));
    CHECK(strip_nw_ribbons(kExampleB, 3) == SkewDiagram(Partition{2}));
    CHECK(strip_nw_ribbons(kExampleA, 2) == SkewDiagram(Partition{6, 6, 6, 6, 3, 3}, Partition{5, 5, 5, 5}));
    CHECK(strip_nw_ribbons(kExampleB, 2) == SkewDiagram(Partition{8, 8, 6, 6, 1, 1}, Partition{5, 5, 5, 5}));
    // Same characters as the diagrams drawn with their components adjacent.
    CHECK(decompose_skew(strip_nw_ribbons(kExampleA, 2)) ==
          decompose_skew(SkewDiagram(Partition{4, 4, 4, 4, 3, 3}, Partition{3, 3, 3, 3})));
    CHECK(decompose_skew(strip_nw_ribbons(kExampleB, 2)) ==
          decompose_skew(SkewDiagram(Partition{4, 4, 2, 2, 1, 1}, Partition{1, 1, 1, 1})));
    CHECK_THROWS_AS(strip_nw_ribbons(kExampleA, 5), std::out_of_range);
    CHECK_THROWS_AS(strip_nw_ribbons(kExampleA, -1), std::out_of_range);
}

TEST_CASE("ribbon properties on random diagrams") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const SkewDiagram a = oracle::random_skew(rng, 20);
        check_labeling_invariants(a);
        const Partition pi = pi_nw(a);
        for (std::size_t t = 0; t <= pi.length(); ++t) {
            const Partition tail = pi_nw(strip_nw_ribbons(a, static_cast<int>(t)));
            CHECK(std::vector<int>(tail.parts().begin(), tail.parts().end()) ==
                  std::vector<int>(pi.parts().begin() + static_cast<long>(t), pi.parts().end()));
        }
        Partition sum;
        for (const SkewDiagram& c : components(a))
            sum = add_partitions(sum, pi_nw(c));
        CHECK(sum == pi);
    }
}
