#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "perical/periodicity.hpp"

using namespace perical;

namespace {
    const RationalField Q;
}

TEST_CASE("model algebras validate")
{
    auto cay = model_cayley_plane(Q);
    CHECK(cay.formal_dim() == 16);
    for (int d = 0; d <= 16; ++d)
        CHECK(cay.dim(d) == ((d == 0 || d == 8 || d == 16) ? 1 : 0));
    // x*x = x^2, x^2*x = 0
    auto x = cay.basis_element(8, 0);
    CHECK(!cay.is_zero(cay.cup(x, x)));
    CHECK_THROWS(cay.cup(cay.cup(x, x), x));

    auto cp3 = model_cp(Q, 3);
    CHECK(cp3.formal_dim() == 6);
    CHECK(cp3.dim(2) == 1);

    auto shp = model_sphere_cross_hp(Q, 2, 1);
    CHECK(shp.formal_dim() == 6);
    for (int d : {0, 2, 4, 6})
        CHECK(shp.dim(d) == 1);
    CHECK(shp.dim(1) == 0);

    CHECK_THROWS_AS(model_sphere_cross_hp(Q, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(model("nope", Q), std::invalid_argument);
    CHECK(model("sphere_cross_hp(2,1)", Q).formal_dim() == 6);
}

TEST_CASE("broken structure data is rejected")
{
    // dim H^0 must be one
    CHECK_THROWS_AS(GradedAlgebra<RationalField>(Q, 2, {2, 0, 1}, {}), std::invalid_argument);
    // unit must act as identity
    typename GradedAlgebra<RationalField>::Structure st;
    st[{0, 0}] = {{{1}}};
    st[{0, 2}] = {{{0}}};  // 1 * x = 0 is not unital
    st[{2, 0}] = {{{1}}};
    CHECK_THROWS_AS(GradedAlgebra<RationalField>(Q, 2, {1, 0, 1}, st), std::invalid_argument);
    // non-associative data on a two-generator degree
    typename GradedAlgebra<RationalField>::Structure bad;
    bad[{0, 0}] = {{{1}}};
    bad[{0, 1}] = {{{1, 0}, {0, 1}}};
    // wrong shape: rows must be dim(a) = 1
    CHECK_THROWS_AS(GradedAlgebra<RationalField>(Q, 2, {1, 2, 1}, bad), std::invalid_argument);
}

TEST_CASE("cup maps")
{
    auto hp2 = model_hp(Q, 2);
    auto u = hp2.basis_element(4, 0);
    // unit multiplies as the identity
    Mat<RationalField> id = hp2.cup_map(hp2.unit(), 4);
    CHECK(id == Mat<RationalField>{{1}});
    // the zero class maps to zero
    Mat<RationalField> z = hp2.cup_map(hp2.zero_element(4), 4);
    CHECK(z == Mat<RationalField>{{0}});
    // the generator is a rank-one isomorphism H^4 -> H^8
    Mat<RationalField> m = hp2.cup_map(u, 4);
    CHECK(rank(Q, m) == 1);
    CHECK_THROWS_AS(hp2.cup_map(u, 6), std::invalid_argument);
}

TEST_CASE("inducing periodicity on the Cayley plane")
{
    auto cay = model_cayley_plane(Q);
    CHECK(induces_periodicity(cay, cay.basis_element(8, 0)));
    // the only degree-4 element is zero, and it does not induce
    CHECK(!induces_periodicity(cay, cay.zero_element(4)));
    // degree 16 = 8 + 8 works through the product clause
    PeriodicityAnalyzer<RationalField> an(cay);
    auto x2 = cay.cup(cay.basis_element(8, 0), cay.basis_element(8, 0));
    CHECK(!an.clause1(x2));
    CHECK(an.induces(x2));
}

TEST_CASE("tautological zero on spheres")
{
    auto s6 = model_sphere(Q, 6);
    for (int k = 1; 2 * k <= 6; ++k)
        CHECK(induces_periodicity(s6, s6.zero_element(k)));
    // the fundamental class is not a product of lower inducers
    CHECK(!induces_periodicity(s6, s6.basis_element(6, 0)));
}

TEST_CASE("spectra of the model algebras")
{
    auto hp3 = periodicity_spectrum(model_hp(Q, 3));
    CHECK(hp3.minimal_degree == std::optional<int>(4));
    CHECK(hp3.spectrum == std::set<int>{4, 8, 12});
    CHECK(hp3.exact);

    auto cp4 = periodicity_spectrum(model_cp(Q, 4));
    CHECK(cp4.minimal_degree == std::optional<int>(2));

    auto s8 = periodicity_spectrum(model_sphere(Q, 8));
    for (int k = 1; k <= 4; ++k)
        CHECK(s8.spectrum.count(k) == 1);

    auto shp = periodicity_spectrum(model_sphere_cross_hp(Q, 2, 2));
    CHECK(shp.spectrum.count(4) == 1);
    CHECK(shp.spectrum.count(2) == 0);
    CHECK(shp.minimal_degree == std::optional<int>(4));
}

TEST_CASE("division")
{
    auto hp2 = model_hp(Q, 2);
    auto u = hp2.basis_element(4, 0);
    auto u2 = hp2.cup(u, u);
    auto z = divide(hp2, u2, u);
    REQUIRE(z.has_value());
    CHECK(z->coords == Vec<RationalField>{1});
    auto one = divide(hp2, u, u);
    REQUIRE(one.has_value());
    CHECK(one->degree == 0);
    CHECK(one->coords == Vec<RationalField>{1});

    auto cp2 = model_cp(Q, 2);
    auto gen2 = cp2.cup(cp2.basis_element(2, 0), cp2.basis_element(2, 0));
    CHECK(!divide(cp2, gen2, cp2.zero_element(2)).has_value());
    CHECK_THROWS_AS(divide(hp2, u, u2), std::invalid_argument);
}

TEST_CASE("closure lemmas over F_3 and Q on two models")
{
    auto run = [&](auto field) {
        using F = decltype(field);
        for (auto* name : {"cp(3)", "hp(2)"}) {
            GradedAlgebra<F> alg = model(name, field);
            PeriodicityAnalyzer<F> an(alg);
            auto rep = an.spectrum();
            CHECK(rep.exact);
            // gcd closure
            for (int k : rep.spectrum)
                for (int l : rep.spectrum)
                    CHECK(rep.spectrum.count(std::gcd(k, l)) == 1);
            // factor closure via divide
            for (int k : rep.spectrum) {
                const auto& x = rep.witnesses.at(k);
                for (int dy = 1; dy < k; ++dy)
                    for (const auto& y : an.candidates(dy)) {
                        if (alg.is_zero(y))
                            continue;
                        auto z = divide(alg, x, y);
                        if (!z)
                            continue;
                        CHECK(an.decide(y));
                        CHECK(an.decide(*z));
                    }
            }
        }
    };
    run(RationalField{});
    run(PrimeField{3});
}

TEST_CASE("full projective enumeration over a prime field")
{
    // two-dimensional H^2: all of P^1(F_3) plus zero = 5 candidates
    PrimeField f3(3);
    auto s2 = model_sphere(f3, 2);
    auto s2b = model_sphere(f3, 2);
    auto prod = tensor_algebra(s2, s2b);
    PeriodicityAnalyzer<PrimeField> an(prod);
    CHECK(an.candidates(2).size() == 5);
    CHECK(an.enumeration_exact(2));
    auto rep = an.spectrum();
    CHECK(rep.exact);
    // no class can be surjective from H^0 onto the two-dimensional H^2
    CHECK(rep.spectrum.empty());
}
