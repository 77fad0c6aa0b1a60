#include <doctest.h>

#include <stdexcept>

#include <random>

#include "perical/chern.hpp"
#include "perical/symfunc.hpp"

using namespace perical;

TEST_CASE("worked products")
{
    CHECK(mult_monomial(Partition::of({1}), Partition::of({1})) ==
          SymFunc::parse("(2) + 2(1,1)"));
    CHECK(mult_monomial(Partition::of({2, 1, 1}), Partition::of({2, 1})) ==
          SymFunc::parse("(4,2,1) + 3(4,1,1,1) + 2(3,3,1) + 2(3,2,2) + 3(3,2,1,1) + "
                         "6(2,2,2,1) + 6(2,2,1,1,1)"));
    CHECK(mult_monomial(Partition::of({5}), Partition()) == SymFunc(Partition::of({5})));
}

TEST_CASE("mult is linear over the unit and zero")
{
    SymFunc f = SymFunc::parse("(2) + (1,1)");
    CHECK(mult(f, SymFunc::zero()).is_zero());
    CHECK(mult(f, SymFunc::unit()) == f);
    CHECK(mult(SymFunc(Partition::of({1})), SymFunc(Partition::of({1}))) ==
          SymFunc::parse("(2) + 2(1,1)"));
}

TEST_CASE("printing and parsing round-trips, including signs")
{
    SymFunc f = SymFunc::parse("(3,1) - 2(2,2) + 7(1,1,1,1)");
    CHECK(f.str() == "(3,1) - 2(2,2) + 7(1,1,1,1)");
    CHECK(SymFunc::parse(f.str()) == f);
    CHECK(SymFunc::parse("-(2)").str() == "-(2)");
    CHECK(SymFunc::parse("0").is_zero());
    CHECK(SymFunc::zero().str() == "0");
    CHECK((f - f).is_zero());
}

TEST_CASE("expand oracle agrees with the matching product")
{
    // brute-force polynomial multiplication in enough variables
    for (int wa = 1; wa <= 5; ++wa)
        for (const Partition& a : partitions_of(wa))
            for (int wb = 1; wb + wa <= 8; ++wb)
                for (const Partition& b : partitions_of(wb)) {
                    int nvars = static_cast<int>(a.size() + b.size());
                    auto table = expand_product(expand_oracle(SymFunc(a), nvars),
                                                expand_oracle(SymFunc(b), nvars));
                    auto direct = expand_oracle(mult_monomial(a, b), nvars);
                    CHECK(table == direct);
                }
}

TEST_CASE("expand oracle enforces the faithfulness threshold")
{
    CHECK_THROWS_AS(expand_oracle(SymFunc(Partition::of({1, 1, 1})), 2), std::invalid_argument);
    ExpandTable t = expand_oracle(SymFunc(Partition::of({1, 1})), 2);
    CHECK(t == ExpandTable{{{1, 1}, 1}});
    ExpandTable t2 = expand_oracle(SymFunc(Partition::of({2})), 3);
    CHECK(t2 == ExpandTable{{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
    CHECK(collect_expansion(t2) == SymFunc(Partition::of({2})));
}

TEST_CASE("commutativity and associativity on random samples")
{
    std::mt19937 rng(12345);
    auto random_func = [&](int maxweight) {
        SymFunc f;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            int w = 1 + static_cast<int>(rng() % maxweight);
            auto parts = partitions_of(w);
            long coeff = static_cast<long>(rng() % 11) - 5;
            f.add_term(parts[rng() % parts.size()], coeff);
        }
        return f;
    };
    for (int round = 0; round < 40; ++round) {
        SymFunc f = random_func(6), g = random_func(6), h = random_func(4);
        CHECK(mult(f, g) == mult(g, f));
        CHECK(mult(mult(f, g), h) == mult(f, mult(g, h)));
    }
}

TEST_CASE("grading of monomial products")
{
    for (int wa = 0; wa <= 5; ++wa)
        for (const Partition& a : partitions_of(wa))
            for (int wb = 0; wb <= 4; ++wb)
                for (const Partition& b : partitions_of(wb)) {
                    SymFunc prod = mult_monomial(a, b);
                    if (!prod.is_zero())
                        CHECK(prod.homogeneous_weight() == std::optional<int>(wa + wb));
                }
}

TEST_CASE("reduction mod p")
{
    CHECK(reduce_mod(SymFunc::parse("(2) + 2(1,1)"), 2) == SymFunc(Partition::of({2})));
    CHECK(reduce_mod(SymFunc(Partition::of({2, 2, 2, 1}), 6), 3).is_zero());
    CHECK(reduce_mod(SymFunc::zero(), 5).is_zero());
    CHECK(reduce_mod(SymFunc::parse("-(3)"), 5) == SymFunc(Partition::of({3}), 4));
    CHECK_THROWS_AS(reduce_mod(SymFunc::unit(), 6), std::invalid_argument);
}

TEST_CASE("monomial to elementary examples")
{
    CHECK(monomial_to_elementary(SymFunc(Partition::of({1, 1}))) ==
          ChernPoly(Partition::of({2})));
    CHECK(monomial_to_elementary(SymFunc(Partition::of({1}))) == ChernPoly(Partition::of({1})));
    // (2) = c_1^2 - 2 c_2, the Newton identity
    ChernPoly p2 = monomial_to_elementary(SymFunc(Partition::of({2})));
    ChernPoly expected(Partition::of({1, 1}));
    expected.add_term(Partition::of({2}), -2);
    CHECK(p2 == expected);
    CHECK_THROWS_AS(monomial_to_elementary(SymFunc::parse("(1) + (2)")), std::invalid_argument);
}

TEST_CASE("elementary to monomial examples")
{
    CHECK(elementary_to_monomial(ChernPoly(Partition::of({2}))) ==
          SymFunc(Partition::of({1, 1})));
    CHECK(elementary_to_monomial(ChernPoly(Partition::of({1, 1}))) ==
          SymFunc::parse("(2) + 2(1,1)"));
    CHECK(elementary_to_monomial(ChernPoly::one()) == SymFunc::unit());
}

TEST_CASE("conversion round-trip for every homogeneous function of weight <= 8")
{
    for (int w = 0; w <= 8; ++w)
        for (const Partition& p : partitions_of(w)) {
            SymFunc f(p, 1);
            f.add_term(Partition::of(std::vector<int>(w, 1)), w ? -3 : 0);
            CHECK(elementary_to_monomial(monomial_to_elementary(f)) == f);
        }
}

TEST_CASE("chern polynomial printing")
{
    ChernPoly p(Partition::of({6}));
    p.add_term(Partition::of({3, 3}), 2);
    p.add_term(Partition::of({2, 1}), -1);
    CHECK(p.str() == "c6 + 2 c3^2 - c2 c1");
    CHECK(ChernPoly().str() == "0");
    CHECK(ChernPoly::one().str() == "1");
}
