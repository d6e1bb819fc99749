#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace argcount;

namespace {

struct Verdict {
    bool weak = false;
    bool strict = false;
};

// Every injective mapping from S2 into S1, tried one by one.
Verdict brute_force(const Ranking &r, const std::vector<std::size_t> &s1, const std::vector<std::size_t> &s2) {
    Verdict v;
    std::vector<int> used(s1.size(), 0);
    auto rec = [&](auto &&self, std::size_t k, bool strict) -> void {
        if (k == s2.size()) {
            v.weak = true;
            if (strict || s1.size() > s2.size()) v.strict = true;
            return;
        }
        for (std::size_t i = 0; i < s1.size(); ++i) {
            if (used[i] || !r.at_least(s1[i], s2[k])) continue;
            used[i] = 1;
            self(self, k + 1, strict || r.strictly_above(s1[i], s2[k]));
            used[i] = 0;
        }
    };
    if (s2.size() <= s1.size()) rec(rec, 0, false);
    return v;
}

// For a total preorder, pairing both sides best-first decides dominance.
Verdict sorted_greedy(const Ranking &r, std::vector<std::size_t> s1, std::vector<std::size_t> s2) {
    Verdict v;
    if (s2.size() > s1.size()) return v;
    auto better = [&](auto a, auto b) { return r.group_of(a) < r.group_of(b); };
    std::sort(s1.begin(), s1.end(), better);
    std::sort(s2.begin(), s2.end(), better);
    bool strict = s1.size() > s2.size();
    for (std::size_t k = 0; k < s2.size(); ++k) {
        if (!r.at_least(s1[k], s2[k])) return v;
        if (r.strictly_above(s1[k], s2[k])) strict = true;
    }
    v.weak = true;
    v.strict = strict;
    return v;
}

Ranking random_ranking(std::size_t n, std::mt19937_64 &rng) {
    std::vector<double> vals(n);
    for (auto &x : vals) x = static_cast<double>(bounded_draw(rng, 4)) / 4.0;
    return derive_ranking(vals, 0.0);
}

ArgSet random_set(std::size_t n, std::size_t size, std::mt19937_64 &rng) {
    ArgSet s(n);
    while (s.size() < size) s.insert(bounded_draw(rng, n));
    return s;
}

void check_witness(const Ranking &r, const ArgSet &s1, const ArgSet &s2, const GroupComparison &g) {
    if (!g.weak()) return;
    ASSERT_EQ(g.witness.size(), s2.size());
    std::vector<std::size_t> images;
    bool strict = s1.size() > s2.size();
    for (auto [from, to] : g.witness) {
        EXPECT_TRUE(s2.contains(from));
        EXPECT_TRUE(s1.contains(to));
        EXPECT_TRUE(r.at_least(to, from));
        if (r.strictly_above(to, from)) strict = true;
        images.push_back(to);
    }
    std::sort(images.begin(), images.end());
    EXPECT_EQ(std::adjacent_find(images.begin(), images.end()), images.end());
    if (g.strict()) {
        EXPECT_TRUE(strict);
    }
}

} // namespace

TEST(Ranking, FourValueOrder) {
    const std::vector<double> v{0.89, 0.22, 0.60, 1.00};
    const auto r = derive_ranking(v, 1e-2);
    ASSERT_EQ(r.groups().size(), 4u);
    EXPECT_EQ(r.groups()[0], std::vector<std::size_t>{3});
    EXPECT_EQ(r.groups()[1], std::vector<std::size_t>{0});
    EXPECT_EQ(r.groups()[2], std::vector<std::size_t>{2});
    EXPECT_EQ(r.groups()[3], std::vector<std::size_t>{1});
    EXPECT_TRUE(r.strictly_above(3, 0));
    EXPECT_EQ(r.cmp(1, 2), std::weak_ordering::less);
}

TEST(Ranking, NearTiesChainTransitively) {
    const std::vector<double> v{1.0, 0.995, 0.99, 0.5};
    const auto r = derive_ranking(v, 6e-3);
    ASSERT_EQ(r.groups().size(), 2u);
    EXPECT_EQ(r.groups()[0], (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(r.tied(0, 2));
    EXPECT_EQ(derive_ranking(v, 0.0).groups().size(), 4u);
}

TEST(Ranking, AttackFreeIsOneGroup) {
    const auto af = oracle::load("corpus/empty.apx");
    const auto r = derive_ranking(solve_counting(af.attack_matrix(), 0.98, 1e-3), 1e-2);
    EXPECT_EQ(r.groups().size(), 1u);
}

TEST(Ranking, PreorderLaws) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        const auto r = random_ranking(7, rng);
        for (std::size_t x = 0; x < 7; ++x) {
            EXPECT_TRUE(r.at_least(x, x));
            for (std::size_t y = 0; y < 7; ++y) {
                EXPECT_TRUE(r.at_least(x, y) || r.at_least(y, x));
                for (std::size_t z = 0; z < 7; ++z)
                    if (r.at_least(x, y) && r.at_least(y, z)) {
                        EXPECT_TRUE(r.at_least(x, z));
                    }
            }
        }
    }
}

TEST(Ranking, RejectsBadInput) {
    const std::vector<double> v{1.0};
    EXPECT_THROW(derive_ranking(v, -1.0), std::invalid_argument);
    EXPECT_THROW(Ranking({{0}, {0}}, {1.0, 2.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(Ranking({{0}}, {1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST(GroupCompare, EmptySets) {
    const auto r = derive_ranking(std::vector<double>{1.0, 0.5}, 0.0);
    EXPECT_TRUE(group_compare(r, ArgSet(2), ArgSet(2)).weak());
    EXPECT_FALSE(group_compare(r, ArgSet(2), ArgSet(2)).strict());
    EXPECT_TRUE(group_compare(r, ArgSet(2, {1}), ArgSet(2)).strict());
    EXPECT_FALSE(group_compare(r, ArgSet(2), ArgSet(2, {1})).weak());
}

TEST(GroupCompare, StrictnessConsidersEveryMapping) {
    // Values a=b=1, c=0.5. S1={a,b}, S2={a,c}: mapping a->a, c->b is strict even though a->b, c->a is not.
    const auto r = derive_ranking(std::vector<double>{1.0, 1.0, 0.5}, 0.0);
    const auto g = group_compare(r, ArgSet(3, {0, 1}), ArgSet(3, {0, 2}));
    EXPECT_TRUE(g.strict());
    check_witness(r, ArgSet(3, {0, 1}), ArgSet(3, {0, 2}), g);
}

TEST(GroupCompare, MatchesBruteForceOnSmallSets) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 3000; ++t) {
        const std::size_t n = 10;
        const auto r = random_ranking(n, rng);
        const auto s1 = random_set(n, bounded_draw(rng, 7), rng);
        const auto s2 = random_set(n, bounded_draw(rng, 7), rng);
        const auto got = group_compare(r, s1, s2);
        const auto want = brute_force(r, s1.members(), s2.members());
        ASSERT_EQ(got.weak(), want.weak) << t;
        ASSERT_EQ(got.strict(), want.strict) << t;
        check_witness(r, s1, s2, got);
    }
}

TEST(GroupCompare, MatchingPathAgreesWithGreedy) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1500; ++t) {
        const std::size_t n = 40;
        const auto r = random_ranking(n, rng);
        const auto k2 = 9 + bounded_draw(rng, 10);
        const auto k1 = k2 + bounded_draw(rng, 3);
        const auto s1 = random_set(n, k1, rng);
        const auto s2 = random_set(n, k2, rng);
        const auto got = group_compare(r, s1, s2);
        const auto want = sorted_greedy(r, s1.members(), s2.members());
        ASSERT_EQ(got.weak(), want.weak) << t;
        ASSERT_EQ(got.strict(), want.strict) << t;
        check_witness(r, s1, s2, got);
    }
}

TEST(GroupCompare, UniverseMismatch) {
    const auto r = derive_ranking(std::vector<double>{1.0, 0.5}, 0.0);
    EXPECT_THROW(group_compare(r, ArgSet(3), ArgSet(2)), InvalidSetError);
}
