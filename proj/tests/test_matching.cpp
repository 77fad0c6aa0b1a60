#include <doctest.h>

#include <stdexcept>

#include "perical/matching.hpp"
#include "perical/symfunc.hpp"

using namespace perical;

TEST_CASE("the two classes of (1)*(1)")
{
    auto ms = enumerate_matchings(Partition::of({1}), Partition::of({1}));
    REQUIRE(ms.size() == 2);
    // deterministic order: targets (2) before (1,1)
    CHECK(ms[0].target() == Partition::of({2}));
    CHECK(ms[0].columns() == std::vector<Matching::Column>{{1, 1}});
    CHECK(ms[0].coefficient() == 1);
    CHECK(ms[1].target() == Partition::of({1, 1}));
    CHECK(ms[1].columns() == std::vector<Matching::Column>{{1, 0}, {0, 1}});
    CHECK(ms[1].coefficient() == 2);
}

TEST_CASE("the worked example has exactly eight classes")
{
    auto ms = enumerate_matchings(Partition::of({2, 1, 1}), Partition::of({2, 1}));
    CHECK(ms.size() == 8);
    // the class producing (4,1,1,1) counts three permutations
    bool found = false;
    for (const auto& m : ms)
        if (m.target() == Partition::of({4, 1, 1, 1})) {
            found = true;
            CHECK(m.coefficient() == 3);
        }
    CHECK(found);
}

TEST_CASE("unit factor gives the identity pairing")
{
    auto ms = enumerate_matchings(Partition::of({7}), Partition());
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].target() == Partition::of({7}));
    CHECK(ms[0].coefficient() == 1);

    auto empty = enumerate_matchings(Partition(), Partition());
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].target() == Partition());
    CHECK(empty[0].coefficient() == 1);
}

TEST_CASE("canonical column order and row recovery")
{
    Matching m({{0, 1}, {2, 2}, {1, 0}, {1, 1}});
    // sorted by decreasing sum, ties by decreasing top
    CHECK(m.columns() == std::vector<Matching::Column>{{2, 2}, {1, 1}, {1, 0}, {0, 1}});
    CHECK(m.top_partition() == Partition::of({2, 1, 1}));
    CHECK(m.bottom_partition() == Partition::of({2, 1, 1}));
    CHECK_THROWS_AS(Matching({{0, 0}}), std::invalid_argument);
}

TEST_CASE("matching completeness against mult_monomial")
{
    // sum of coefficient * target over all classes reproduces the product
    for (int wa = 0; wa <= 6; ++wa)
        for (const Partition& a : partitions_of(wa))
            for (int wb = 0; wb + wa <= 8; ++wb)
                for (const Partition& b : partitions_of(wb)) {
                    SymFunc total;
                    for (const Matching& m : enumerate_matchings(a, b)) {
                        CHECK(m.top_partition() == a);
                        CHECK(m.bottom_partition() == b);
                        total.add_term(m.target(), m.coefficient());
                    }
                    CHECK(total == mult_monomial(a, b));
                }
}
