#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "perical/weightsets.hpp"

using namespace perical;

namespace {

    Weight4 wt(int a, int b, int c, int d) { return Weight4::normalized({a, b, c, d}); }

    WeightSet with_extra(const std::vector<Weight4>& extra)
    {
        std::vector<Weight4> ws;
        for (int i = 0; i < 4; ++i) {
            Weight4 e;
            e.c[i] = 1;
            ws.push_back(e);
        }
        for (const auto& w : extra)
            ws.push_back(w);
        return WeightSet::make(ws);
    }

}  // namespace

TEST_CASE("sign normalization")
{
    CHECK(wt(-1, 0, 1, 0).c == std::array<int, 4>{1, 0, -1, 0});
    CHECK(wt(0, 1, -1, 0).c == std::array<int, 4>{0, 1, -1, 0});
    CHECK_THROWS_AS(Weight4::normalized({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("the global order starts with the basis and respects 0 < -1 < 1")
{
    const auto& list = full_list();
    CHECK(list.size() == 40);
    CHECK(list[0].c == std::array<int, 4>{1, 0, 0, 0});
    CHECK(list[3].c == std::array<int, 4>{0, 0, 0, 1});
    CHECK(list[4].c == std::array<int, 4>{0, 0, 1, -1});
    CHECK(list[5].c == std::array<int, 4>{0, 0, 1, 1});
    CHECK(global_rank(wt(0, 0, 1, -1)) < global_rank(wt(0, 0, 1, 1)));
    CHECK(global_rank(wt(0, 1, 0, 0)) < global_rank(wt(0, 0, 1, -1)));
}

TEST_CASE("condition (star)")
{
    CHECK(star_check(with_extra({}).weights()));
    CHECK(star_check(with_extra({wt(1, 1, 0, 0)}).weights()));
    // det(e3, e4, (1,1,1,1), (1,-1,0,0)) = -2
    std::vector<Weight4> bad{wt(0, 0, 1, 0), wt(0, 0, 0, 1), wt(1, 1, 1, 1), wt(1, -1, 0, 0)};
    CHECK(!star_check(bad));
    CHECK_THROWS_AS(with_extra({wt(1, 1, 1, 1), wt(1, -1, 0, 0)}), std::invalid_argument);
}

TEST_CASE("set validation")
{
    CHECK_THROWS_AS(WeightSet::make({wt(1, 0, 0, 0), wt(0, 1, 0, 0), wt(0, 0, 1, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(with_extra({wt(1, 0, 0, 0)}), std::invalid_argument);  // duplicate
}

TEST_CASE("extension of the basis and the first level")
{
    std::vector<WeightSet> level{WeightSet::basis()};
    auto next = extend(level);
    // every normalized two-nonzero vector extends, all pass (star) with dets +-1
    CHECK(next.size() == 36);
    std::set<WeightSet> classes;
    for (const auto& ws : next)
        classes.insert(canonical_form(ws));
    CHECK(classes.size() == 3);
}

TEST_CASE("canonical form is idempotent and permutation invariant")
{
    WeightSet ws = with_extra({wt(1, 0, 0, -1), wt(1, 0, -1, 0)});
    WeightSet canon = canonical_form(ws);
    CHECK(canonical_form(canon) == canon);

    // permuting coordinates is a reachable basis change
    std::vector<Weight4> permuted;
    for (const auto& w : ws.weights())
        permuted.push_back(Weight4::normalized({w.c[2], w.c[0], w.c[3], w.c[1]}));
    CHECK(canonical_form(WeightSet::make(permuted)) == canon);
    CHECK(equivalent(ws, WeightSet::make(permuted)));
    CHECK(canonical_form(WeightSet::basis()) == WeightSet::basis());
}

TEST_CASE("canonical form is constant on random orbit samples")
{
    std::mt19937 rng(777);
    ClassificationTable table = classify_all();
    for (const auto& entry : table.classes) {
        const auto& w = entry.set.weights();
        for (int round = 0; round < 25; ++round) {
            // random unimodular 4-subset + sign diagonal, the orbit moves
            size_t i = rng() % w.size(), j = rng() % w.size(), k = rng() % w.size(),
                   l = rng() % w.size();
            if (i == j || i == k || i == l || j == k || j == l || k == l)
                continue;
            long d = det4(w[i], w[j], w[k], w[l]);
            if (d != 1 && d != -1)
                continue;
            // transform = inverse of the chosen column matrix with signs
            long m[4][4];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    m[r][c] = 0;
            // build via the library: send the subset to +-e_i and clean
            std::array<size_t, 4> idx{i, j, k, l};
            std::vector<Weight4> moved;
            bool ok = true;
            // solve: columns of M are the chosen weights; x -> M^{-1} x via adjugate
            long mm[4][4];
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    mm[r][c] = w[idx[c]].c[r];
            auto minor3 = [&](int r, int c) {
                int ri[3], ci[3], t = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != r)
                        ri[t++] = x;
                t = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != c)
                        ci[t++] = x;
                return mm[ri[0]][ci[0]] *
                           (mm[ri[1]][ci[1]] * mm[ri[2]][ci[2]] -
                            mm[ri[1]][ci[2]] * mm[ri[2]][ci[1]]) -
                       mm[ri[0]][ci[1]] *
                           (mm[ri[1]][ci[0]] * mm[ri[2]][ci[2]] -
                            mm[ri[1]][ci[2]] * mm[ri[2]][ci[0]]) +
                       mm[ri[0]][ci[2]] *
                           (mm[ri[1]][ci[0]] * mm[ri[2]][ci[1]] -
                            mm[ri[1]][ci[1]] * mm[ri[2]][ci[0]]);
            };
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    m[r][c] = ((r + c) % 2 ? -1 : 1) * minor3(c, r) * d;
            int signs = static_cast<int>(rng() % 16);
            for (const auto& omega : w) {
                std::array<int, 4> u{};
                for (int r = 0; r < 4; ++r) {
                    long s = 0;
                    for (int c = 0; c < 4; ++c)
                        s += m[r][c] * omega.c[c];
                    u[r] = static_cast<int>((signs & (1 << r)) ? -s : s);
                }
                moved.push_back(Weight4::normalized(u));
            }
            if (!ok)
                continue;
            CHECK(canonical_form(WeightSet::make(moved)) == entry.set);
        }
    }
}

TEST_CASE("splitting subspaces")
{
    CHECK(splitting_t3(WeightSet::basis()).has_value());
    // the difference-pattern class admits none
    WeightSet diff = with_extra({wt(1, -1, 0, 0), wt(0, 0, 1, -1)});
    CHECK(!splitting_t3(diff).has_value());
    // a found witness really meets the set in exactly three weights
    WeightSet five = with_extra({wt(1, 0, 0, -1)});
    auto normal = splitting_t3(five);
    REQUIRE(normal.has_value());
    int inside = 0;
    for (const auto& w : five.weights()) {
        long dot = 0;
        for (int t = 0; t < 4; ++t)
            dot += static_cast<long>((*normal)[t]) * w.c[t];
        if (dot == 0)
            ++inside;
    }
    CHECK(inside == 3);
}

TEST_CASE("hereditary (star) on classified sets")
{
    ClassificationTable table = classify_all();
    for (const auto& entry : table.classes) {
        std::vector<Weight4> extra;
        for (const auto& w : entry.set.weights())
            if (global_rank(w) >= 4)
                extra.push_back(w);
        // every subset between the basis and the set still passes
        size_t n = extra.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            std::vector<Weight4> sub(full_list().begin(), full_list().begin() + 4);
            for (size_t t = 0; t < n; ++t)
                if (mask & (size_t(1) << t))
                    sub.push_back(extra[t]);
            CHECK(star_check(sub));
        }
        for (const auto& w : entry.set.weights())
            for (int t = 0; t < 4; ++t)
                CHECK((w.c[t] >= -1 && w.c[t] <= 1));
    }
}

TEST_CASE("classification counts")
{
    ClassificationTable t1 = classify_all(1);
    CHECK(t1.classes.size() == 17);
    std::map<int, int> expected{{4, 1}, {5, 3}, {6, 4}, {7, 4}, {8, 2}, {9, 2}, {10, 1}};
    CHECK(t1.histogram_by_size() == expected);
    CHECK(t1.splitting_count() == 15);

    // the two non-splitting classes: one of size 6 and the size-10 set
    std::vector<int> nonsplit;
    for (const auto& e : t1.classes)
        if (!e.splitting)
            nonsplit.push_back(static_cast<int>(e.set.size()));
    CHECK(nonsplit == std::vector<int>{6, 10});

    // schedule independence
    ClassificationTable t2 = classify_all(4);
    REQUIRE(t2.classes.size() == t1.classes.size());
    for (size_t i = 0; i < t1.classes.size(); ++i) {
        CHECK(t1.classes[i].set == t2.classes[i].set);
        CHECK(t1.classes[i].splitting == t2.classes[i].splitting);
    }
}
