#include <doctest.h>

#include <stdexcept>

#include <random>

#include "perical/triangle.hpp"

using namespace perical;

namespace {

    RatVec rv(std::vector<long> v)
    {
        RatVec r;
        for (long x : v)
            r.push_back(mpq_class(x));
        return r;
    }

    RatVec add(const RatVec& x, const RatVec& y)
    {
        RatVec r(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            r[i] = x[i] + y[i];
        return r;
    }
    RatVec sub(const RatVec& x, const RatVec& y)
    {
        RatVec r(x.size());
        for (size_t i = 0; i < x.size(); ++i)
            r[i] = x[i] - y[i];
        return r;
    }

    Triangle type1()
    {
        return Triangle::make({{rv({1, 0, 0, 0})}}, {{rv({0, 1, 0, 0})}},
                              {{rv({1, 1, 0, 0})}});
    }

    Triangle type2(bool with_c)
    {
        RatVec a = rv({1, 0, 0, 0}), b = rv({0, 1, 0, 0});
        RatVec c = with_c ? rv({0, 0, 1, 0}) : rv({0, 0, 0, 0});
        return Triangle::make({{a, add(a, c)}}, {{b, add(b, c)}},
                              {{sub(a, b), add(add(a, b), c)}});
    }

    Triangle degenerate()
    {
        RatVec a = rv({1, 0, 0, 0}), b = rv({0, 1, 0, 0});
        return Triangle::make({{a, a}}, {{b, b}}, {{sub(a, b), sub(a, b)}});
    }

}  // namespace

TEST_CASE("triangle validation")
{
    CHECK_THROWS_AS(Triangle::make({{rv({1, 0})}}, {{rv({0, 1})}}, {{}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Triangle::make({{rv({0, 0})}}, {{rv({0, 1})}}, {{rv({1, 1})}}),
                    std::invalid_argument);
}

TEST_CASE("axioms on the normal forms")
{
    CHECK(triangle_axioms_check(type1()).ok);
    CHECK(triangle_axioms_check(type2(false)).ok);
    CHECK(triangle_axioms_check(type2(true)).ok);
    // the degenerate repeated-difference pattern passes the counting axioms
    CHECK(triangle_axioms_check(degenerate()).ok);

    // unequal plane counts are caught
    RatVec a = rv({1, 0, 0, 0}), b = rv({0, 1, 0, 0});
    Triangle bad = Triangle::make({{a, add(a, rv({0, 0, 1, 0}))}}, {{b, b}},
                                  {{add(a, b), add(a, b)}});
    CHECK(!triangle_axioms_check(bad).ok);
}

TEST_CASE("product dependence")
{
    CHECK(lindep_products_check(type1()));       // a, b, a+b
    CHECK(lindep_products_check(type2(false)));  // a^2, b^2, a^2-b^2
    CHECK(!lindep_products_check(degenerate())); // a^2, b^2, (a-b)^2
}

TEST_CASE("normal forms classify to themselves")
{
    auto c1 = triangle_classify(type1());
    CHECK(c1.kind == TriangleKind::Type1);
    // identity basis change on an input that is already in normal form
    RatMat id(4, RatVec(4, 0));
    for (int i = 0; i < 4; ++i)
        id[i][i] = 1;
    CHECK(c1.basis_change == id);
    CHECK(c1.scalars_a == std::vector<mpq_class>{1});
    CHECK(c1.normal_c == std::vector<RatVec>{rv({1, 1, 0, 0})});

    auto c2 = triangle_classify(type2(true));
    CHECK(c2.kind == TriangleKind::Type2);
    CHECK(c2.c == rv({0, 0, 1, 0}));

    auto c0 = triangle_classify(type2(false));
    CHECK(c0.kind == TriangleKind::Type2);
    CHECK(c0.c == rv({0, 0, 0, 0}));
}

TEST_CASE("span containment yields NotTransversal")
{
    RatVec a = rv({1, 0, 0, 0});
    RatVec a2 = rv({2, 0, 0, 0});
    Triangle t = Triangle::make({{a, a2}}, {{a, a}}, {{a, a2}});
    CHECK(triangle_classify(t).kind == TriangleKind::NotTransversal);
}

TEST_CASE("degenerate pattern is rejected")
{
    auto cls = triangle_classify(degenerate());
    CHECK(cls.kind == TriangleKind::AxiomViolation);
}

TEST_CASE("m bound on classified triangles")
{
    for (auto t : {type1(), type2(false), type2(true)}) {
        auto cls = triangle_classify(t);
        REQUIRE((cls.kind == TriangleKind::Type1 || cls.kind == TriangleKind::Type2));
        CHECK(t.m() <= 2);
    }
}

TEST_CASE("classification is invariant under GL and per-weight scaling")
{
    std::mt19937 rng(4242);
    auto random_matrix = [&]() {
        for (;;) {
            RatMat m(4, RatVec(4, 0));
            for (auto& row : m)
                for (auto& x : row)
                    x = static_cast<long>(rng() % 7) - 3;
            try {
                inverse(RationalField{}, m);
                return m;
            } catch (const std::invalid_argument&) {
            }
        }
    };
    auto random_scalars = [&](size_t n) {
        std::vector<mpq_class> s(n);
        for (auto& x : s) {
            long num = static_cast<long>(rng() % 9) - 4;
            if (num == 0)
                num = 2;
            x = mpq_class(num, 1 + static_cast<long>(rng() % 3));
            x.canonicalize();
        }
        return s;
    };

    for (int round = 0; round < 12; ++round) {
        for (int which = 0; which < 3; ++which) {
            Triangle base = which == 0 ? type1() : type2(which == 2);
            size_t m = base.A.weights.size();
            Triangle moved = transform_triangle(base, random_matrix(), random_scalars(m),
                                                random_scalars(m), random_scalars(m));
            auto cls = triangle_classify(moved);
            CHECK(cls.kind == (which == 0 ? TriangleKind::Type1 : TriangleKind::Type2));
            // applying the emitted data lands exactly on the recorded normal form
            Triangle landed = transform_triangle(moved, cls.basis_change, cls.scalars_a,
                                                 cls.scalars_b, cls.scalars_c);
            auto sorted = [](std::vector<RatVec> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            CHECK(sorted(landed.A.weights) == sorted(cls.normal_a));
            CHECK(sorted(landed.B.weights) == sorted(cls.normal_b));
            CHECK(sorted(landed.C.weights) == sorted(cls.normal_c));
        }
    }
}
