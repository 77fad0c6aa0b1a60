#include <doctest.h>

#include <stdexcept>

#include "perical/steenrod.hpp"

using namespace perical;

namespace {
    SymFunc chern(int k)
    {
        return k == 0 ? SymFunc::unit() : SymFunc(Partition::of(std::vector<int>(k, 1)));
    }
}

TEST_CASE("prime context validation")
{
    CHECK_THROWS_AS(PrimeContext(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeContext(3, 1), std::invalid_argument);
    CHECK_NOTHROW(PrimeContext(2, 1));
}

TEST_CASE("generator rules")
{
    PrimeContext p3(3, 2);
    SymFunc x1(Partition::of({1}));
    CHECK(steenrod_power(p3, 0, SymFunc::parse("(2,1) + 2(1,1,1)")) ==
          SymFunc::parse("(2,1) + 2(1,1,1)"));
    CHECK(steenrod_power(p3, 1, x1) == SymFunc(Partition::of({3})));
    CHECK(steenrod_power(p3, 2, x1).is_zero());

    PrimeContext p5(5, 2);
    CHECK(steenrod_power(p5, 1, chern(2)) == SymFunc(Partition::of({5, 1})));
    CHECK_THROWS_AS(steenrod_power(p5, 1, SymFunc::parse("(1) + (2)")), std::invalid_argument);
}

TEST_CASE("steenrod power agrees with the full expansion oracle")
{
    // the independent route: expand, substitute x -> x + x^p, recollect
    for (int p : {2, 3, 5}) {
        PrimeContext ctx(p, 2);
        for (int w = 1; w <= 5; ++w)
            for (const Partition& mu : partitions_of(w)) {
                int n = static_cast<int>(mu.size());
                ExpandTable table = expand_oracle(SymFunc(mu), n);
                ExpandTable image;
                for (const auto& [exps, c] : table) {
                    // substitute per variable and multiply out
                    ExpandTable term{{std::vector<int>(n, 0), c}};
                    for (int v = 0; v < n; ++v) {
                        ExpandTable factor;
                        for (int s = 0; s <= exps[v]; ++s) {
                            std::vector<int> e(n, 0);
                            e[v] = exps[v] + (p - 1) * s;
                            factor[e] = binom(exps[v], s);
                        }
                        term = expand_product(term, factor);
                    }
                    for (const auto& [e, cc] : term)
                        image[e] += cc;
                }
                for (int i = 0; i <= w + 1; ++i) {
                    ExpandTable selected;
                    for (const auto& [e, cc] : image) {
                        int total = 0;
                        for (int x : e)
                            total += x;
                        if (total == w + (p - 1) * i && cc % p != 0)
                            selected[e] = ((cc % p) + p) % p;
                    }
                    CHECK(steenrod_power(ctx, i, SymFunc(mu)) == collect_expansion(selected));
                }
            }
    }
}

TEST_CASE("degree law and vanishing")
{
    for (int p : {2, 3, 5}) {
        PrimeContext ctx(p, 2);
        for (int w = 1; w <= 6; ++w)
            for (const Partition& mu : partitions_of(w)) {
                for (int i = 0; i <= w; ++i) {
                    SymFunc im = steenrod_power(ctx, i, SymFunc(mu));
                    if (!im.is_zero())
                        CHECK(im.homogeneous_weight() == std::optional<int>(w + (p - 1) * i));
                }
                CHECK(steenrod_power(ctx, w + 1, SymFunc(mu)).is_zero());
            }
    }
}

TEST_CASE("top power is the Frobenius")
{
    for (int p : {2, 3, 5}) {
        PrimeContext ctx(p, 2);
        for (int w = 1; w <= 6; ++w)
            for (const Partition& mu : partitions_of(w)) {
                SymFunc f(mu);
                CHECK(steenrod_power(ctx, w, f) == frobenius_power(ctx, f));
            }
    }
}

TEST_CASE("frobenius examples")
{
    PrimeContext p3(3, 2);
    CHECK(frobenius_power(p3, SymFunc(Partition::of({2, 2}))) ==
          SymFunc(Partition::of({6, 6})));
    CHECK(frobenius_power(p3, SymFunc::unit()) == SymFunc::unit());
    PrimeContext p2(2, 2);
    SymFunc f = SymFunc::parse("(1) + (2)");
    CHECK(frobenius_power(p2, f) == SymFunc::parse("(2) + (4)"));
    CHECK(frobenius_power(p2, f) == reduce_mod(mult(f, f), 2));
}

TEST_CASE("Cartan instances")
{
    for (int p : {2, 3, 5}) {
        PrimeContext ctx(p, 2);
        SymFunc x1(Partition::of({1}));
        CHECK(verify_cartan(ctx, 1, x1, SymFunc::unit()));
        CHECK(verify_cartan(ctx, 1, x1, x1));
        CHECK(verify_cartan(ctx, 2, SymFunc(Partition::of({2, 1})), x1));
    }
    PrimeContext w1(2, 1);
    CHECK(verify_cartan(w1, 1, SymFunc(Partition::of({1})), SymFunc(Partition::of({1, 1}))));
}

TEST_CASE("Adem instances and precondition")
{
    CHECK(verify_adem_instance(PrimeContext(2, 2), 1, 1, 4));
    CHECK(verify_adem_instance(PrimeContext(3, 2), 1, 1, 4));
    CHECK(verify_adem_instance(PrimeContext(3, 2), 2, 1, 4));
    CHECK_THROWS_AS(verify_adem_instance(PrimeContext(2, 2), 2, 1, 4), std::invalid_argument);
}

TEST_CASE("Wu formula")
{
    CHECK(verify_wu(3, 0));
    CHECK(verify_wu(3, 1));
    CHECK(verify_wu(5, 2));
    for (int k = 1; k <= 9; ++k)
        for (int i = 0; 2 * i <= k; ++i)
            CHECK(verify_wu(k, i));
    CHECK_THROWS_AS(verify_wu(3, 2), std::invalid_argument);
}

TEST_CASE("Brown-Peterson leading coefficients")
{
    CHECK(bp_leading_coefficient(5, 6, 1) == 1);
    CHECK(bp_leading_coefficient(2, 9, 0) == 1);
    CHECK(bp_leading_coefficient(3, 4, 1) == 1);
    CHECK_THROWS_AS(bp_leading_coefficient(3, 4, 2), std::invalid_argument);
}

TEST_CASE("the p=5 coefficient profile from the remark")
{
    // P^1(c_2) = 2 c_3^2 + c_6 + R with every term of R divisible by c_1 or c_2
    ChernPoly profile = chern_coefficient_profile(PrimeContext(5, 2), 1, 2);
    CHECK(profile.coeff(Partition::of({3, 3})) == 2);
    CHECK(profile.coeff(Partition::of({6})) == 1);
    for (const auto& [indices, c] : profile.terms()) {
        if (indices == Partition::of({3, 3}) || indices == Partition::of({6}))
            continue;
        int smallest = indices.part(indices.size() - 1);
        CHECK(smallest <= 2);
    }
}

TEST_CASE("odd squares vanish on doubled partitions")
{
    // symmetric functions in the squares t_i^2 model Chern polynomials at
    // p=2; their odd Sq components vanish
    PrimeContext sw(2, 1);
    for (int w = 1; w <= 4; ++w)
        for (const Partition& mu : partitions_of(w)) {
            std::vector<int> doubled;
            for (int part : mu.parts())
                doubled.push_back(2 * part);
            SymFunc f(Partition::of(doubled));
            for (int i = 1; i <= 2 * w + 1; i += 2)
                CHECK(steenrod_power(sw, i, f).is_zero());
        }
}

TEST_CASE("decomposition certificates, all three shapes")
{
    DecompositionCertificate odd = decompose_chern(3, 4);
    CHECK(odd.verified);
    CHECK(odd.source_index == 2);
    CHECK(odd.op_exponent == 1);
    CHECK(odd.leading_coeff == 1);

    DecompositionCertificate m3 = decompose_chern(2, 3);
    CHECK(m3.verified);
    CHECK(m3.source_index == 2);
    CHECK(m3.op_exponent == 1);  // Sq^2

    DecompositionCertificate m1 = decompose_chern(2, 5);
    CHECK(m1.verified);
    CHECK(m1.source_index == 3);
    CHECK(m1.op_exponent == 2);  // Sq^4

    for (const auto& cert : {odd, m3, m1}) {
        for (const auto& [indices, c] : cert.decomposable_part.terms())
            CHECK(indices.size() >= 2);
        // recompute: profile = lead * c_k + decomposable
        ChernPoly profile = chern_coefficient_profile(PrimeContext(cert.p, 2),
                                                      cert.op_exponent, cert.source_index);
        CHECK(profile.coeff(Partition::of({cert.k})) == cert.leading_coeff);
    }

    CHECK_THROWS_AS(decompose_chern(3, 9), std::invalid_argument);   // lambda = 1
    CHECK_THROWS_AS(decompose_chern(3, 2), std::invalid_argument);   // lambda < p
    CHECK_THROWS_AS(decompose_chern(4, 12), std::invalid_argument);  // p not prime
}

TEST_CASE("S_l ideal sweeps")
{
    CHECK(verify_sl_ideal(2, 1, 6));
    CHECK(verify_sl_ideal(3, 1, 6));
    CHECK(verify_sl_ideal(5, 1, 0));  // vacuous
    CHECK(verify_sl_ideal(2, 2, 6));
}

TEST_CASE("descent traces")
{
    DescentTrace t56 = descent_trace(5, 6);
    REQUIRE(t56.witness_a.has_value());
    CHECK(*t56.witness_a == 2);
    // rows carry the closed form, and the last row realizes the residue
    for (const auto& r : t56.rows) {
        CHECK(r.a == (r.j * 4 + 5) / 6);
        CHECK(r.deg_factor == r.a * 6 - r.j * 4);
    }
    CHECK(t56.rows.back().deg_factor == (2 * 6) % 4);

    DescentTrace t34 = descent_trace(3, 4);
    CHECK(t34.witness_a == std::optional<long>(1));

    // even lambda makes the residue vanish at a = (p-1)/2
    for (int p : {3, 5, 7})
        for (long lambda = p + 1; lambda <= 3 * p; ++lambda) {
            if (lambda % p == 0 || lambda % 2)
                continue;
            CHECK((((p - 1) / 2) * lambda) % (p - 1) == 0);
        }

    CHECK_THROWS_AS(descent_trace(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(descent_trace(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(descent_trace(5, 3), std::invalid_argument);
}
