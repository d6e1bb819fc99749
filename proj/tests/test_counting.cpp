#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace argcount;

namespace {

std::vector<std::int64_t> ints(std::initializer_list<std::int64_t> v) { return v; }

// Closed form of (I + 0.49 A) v = e for the four-argument sample with alpha 0.98, N 2,
// eliminated by hand: v4 = 1, v3 = (1 - 0.49 v2) / 1.49, 1.2499 v2 = 0.2699, v1 = 1 - 0.49 v2.
std::vector<double> sample4_exact() {
    const double v2 = 0.2699 / 1.2499;
    const double v3 = (1.0 - 0.49 * v2) / 1.49;
    return {1.0 - 0.49 * v2, v2, v3, 1.0};
}

} // namespace

TEST(SimpleCounting, GradedCountsOfSampleFour) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    EXPECT_EQ(graded_counts(a, 0).values, ints({1, 1, 1, 1}));
    EXPECT_EQ(graded_counts(a, 1).values, ints({1, 2, 2, 0}));
    EXPECT_EQ(graded_counts(a, 2).values, ints({2, 2, 4, 0}));
}

TEST(SimpleCounting, AlternatingSumsOfSampleFour) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    EXPECT_EQ(simple_counting(a, 0).values, ints({1, 1, 1, 1}));
    EXPECT_EQ(simple_counting(a, 1).values, ints({0, -1, -1, 1}));
    EXPECT_EQ(simple_counting(a, 2).values, ints({2, 1, 3, 1}));
}

TEST(SimpleCounting, OverflowIsReported) {
    // Every argument attacks every argument: A^l e = 4^l, which leaves int64 at l = 32.
    std::vector<Attack> att;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) att.push_back({i, j});
    const ArgumentationFramework af({"a", "b", "c", "d"}, att);
    EXPECT_EQ(graded_counts(af.attack_matrix(), 31).values[0], std::int64_t{1} << 62);
    try {
        (void)graded_counts(af.attack_matrix(), 32);
        FAIL() << "expected overflow";
    } catch (const CountOverflowError &e) {
        EXPECT_EQ(e.length(), 32u);
    }
    EXPECT_THROW((void)simple_counting(af.attack_matrix(), 40), CountOverflowError);
}

TEST(DampedCounting, FirstIteratesOfSampleFour) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    const std::vector<double> e(4, 1.0);
    const auto v1 = iterate_counting(a, 0.98, e);
    const auto v2 = iterate_counting(a, 0.98, v1);
    const double want1[] = {0.51, 0.02, 0.02, 1.00};
    const double want2[] = {0.99, 0.50, 0.98, 1.00};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(v1[i], want1[i], 0.005);
        EXPECT_NEAR(v2[i], want2[i], 0.005);
    }
}

TEST(DampedCounting, IterativeSolveOfSampleFour) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    const auto s = solve_counting(a, 0.98, 1e-3);
    const double want[] = {0.89, 0.22, 0.60, 1.00};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s.values[i], want[i], 0.005);
    EXPECT_EQ(s.changes.size(), s.iterations);
    EXPECT_LE(s.changes.back(), 1e-3);
    EXPECT_GT(s.changes[s.changes.size() - 2], 1e-3);
}

TEST(DampedCounting, DirectSolveMatchesHandElimination) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    const auto exact = sample4_exact();
    const auto d = solve_counting_direct(a, 0.98);
    const double four_places[] = {0.8942, 0.2160, 0.6001, 1.0000};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(d.values[i], exact[i], 1e-12);
        EXPECT_NEAR(d.values[i], four_places[i], 1e-4);
    }
}

TEST(DampedCounting, DirectSolveMatchesGaussOracleOnRandomFrameworks) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto af = generate_random(2 + seed % 9, 0.1 + 0.05 * static_cast<double>(seed % 8), seed);
        for (double alpha : {0.5, 0.9, 0.98}) {
            const auto ref = oracle::gauss_counting(af, alpha);
            const auto d = solve_counting_direct(af.attack_matrix(), alpha);
            for (std::size_t i = 0; i < af.size(); ++i) EXPECT_NEAR(d.values[i], ref[i], 1e-10) << seed;
        }
    }
}

TEST(DampedCounting, IterativeApproachesDirect) {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto af = generate_random(7, 0.3, seed);
        const auto &a = af.attack_matrix();
        const double alpha = 0.9;
        const auto it = solve_counting(a, alpha, 1e-13);
        const auto d = solve_counting_direct(a, alpha);
        for (std::size_t i = 0; i < af.size(); ++i) EXPECT_NEAR(it.values[i], d.values[i], 1e-11);
    }
}

TEST(DampedCounting, TwoCycleAndSelfAttacker) {
    for (double alpha : {0.3, 0.9, 0.98}) {
        const ArgumentationFramework cycle({"a", "b"}, {{0, 1}, {1, 0}});
        const ArgumentationFramework self({"a"}, {{0, 0}});
        for (const auto *af : {&cycle, &self}) {
            const auto d = solve_counting_direct(af->attack_matrix(), alpha);
            for (double v : d.values) EXPECT_NEAR(v, 1.0 / (1.0 + alpha), 1e-14);
            const auto s = solve_counting(af->attack_matrix(), alpha, 1e-12);
            for (double v : s.values) EXPECT_NEAR(v, 1.0 / (1.0 + alpha), 1e-10);
        }
    }
}

TEST(DampedCounting, AttackFreeFrameworkScoresOne) {
    const ArgumentationFramework af({"a", "b", "c"}, {});
    const auto s = solve_counting(af.attack_matrix(), 0.98, 1e-3);
    EXPECT_EQ(s.iterations, 1u);
    for (double v : s.values) EXPECT_EQ(v, 1.0);
    const auto d = solve_counting_direct(af.attack_matrix(), 0.98);
    for (double v : d.values) EXPECT_EQ(v, 1.0);
}

TEST(DampedCounting, EmptyFramework) {
    const ArgumentationFramework af;
    EXPECT_TRUE(solve_counting(af.attack_matrix(), 0.9, 1e-3).values.empty());
    EXPECT_TRUE(solve_counting_direct(af.attack_matrix(), 0.9).values.empty());
}

TEST(DampedCounting, PartialSumsEqualRecurrence) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto af = generate_random(1 + seed % 8, 0.35, seed * 7 + 1);
        const auto &a = af.attack_matrix();
        std::vector<double> v(af.size(), 1.0);
        for (std::size_t k = 0; k <= 20; ++k) {
            if (k > 0) v = iterate_counting(a, 0.95, v);
            const auto p = damped_partial(a, 0.95, k);
            for (std::size_t i = 0; i < af.size(); ++i) ASSERT_NEAR(p.values[i], v[i], 1e-12) << seed << " " << k;
        }
    }
}

TEST(DampedCounting, ChangesContract) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto af = generate_random(8, 0.4, seed);
        const auto s = solve_counting(af.attack_matrix(), 0.98, 1e-9);
        EXPECT_LE(s.changes.front(), 0.98 + 1e-12);
        for (std::size_t k = 1; k < s.changes.size(); ++k) EXPECT_LE(s.changes[k], 0.98 * s.changes[k - 1] + 1e-12);
    }
}

TEST(DampedCounting, NonConvergenceCarriesLastIterate) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    try {
        (void)solve_counting(a, 0.98, 1e-9, 3);
        FAIL() << "expected non-convergence";
    } catch (const NonConvergenceError &e) {
        EXPECT_EQ(e.iterations(), 3u);
        EXPECT_EQ(e.last_iterate().size(), 4u);
        EXPECT_GT(e.last_change(), 1e-9);
    }
}

TEST(DampedCounting, RejectsBadParameters) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    EXPECT_THROW((void)solve_counting(a, 1.0, 1e-3), std::invalid_argument);
    EXPECT_THROW((void)solve_counting(a, 0.0, 1e-3), std::invalid_argument);
    EXPECT_THROW((void)solve_counting(a, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW((void)solve_counting_direct(a, 1.5), std::invalid_argument);
    std::vector<double> wrong(3, 1.0);
    EXPECT_THROW((void)iterate_counting(a, 0.5, wrong), std::invalid_argument);
}

TEST(Categoriser, SelfAttackerIsGoldenRatioConjugate) {
    const ArgumentationFramework af({"a"}, {{0, 0}});
    const auto s = categoriser_valuation(af.attack_matrix(), 1e-13);
    EXPECT_NEAR(s.values[0], (std::sqrt(5.0) - 1.0) / 2.0, 1e-10);
}

TEST(Categoriser, SatisfiesItsFixpointEquation) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto af = generate_random(6, 0.3, seed);
        const auto s = categoriser_valuation(af.attack_matrix(), 1e-13);
        for (std::size_t i = 0; i < af.size(); ++i) {
            double sum = 0;
            for (auto j : af.attackers_of(i)) sum += s.values[j];
            EXPECT_NEAR(s.values[i], 1.0 / (1.0 + sum), 1e-10);
        }
    }
}

TEST(Categoriser, UnattackedTopsBothValuations) {
    const auto af = oracle::sample4();
    const auto c = categoriser_valuation(af.attack_matrix(), 1e-10);
    const auto v = solve_counting_direct(af.attack_matrix(), 0.98);
    EXPECT_EQ(c.values[3], 1.0);
    EXPECT_EQ(v.values[3], 1.0);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LT(c.values[i], 1.0);
        EXPECT_LT(v.values[i], 1.0);
    }
}

TEST(Formatting, ShortestRepresentationRoundTrips) {
    EXPECT_EQ(shortest_repr(1.0), "1");
    EXPECT_EQ(shortest_repr(0.1), "0.1");
    const double x = 0.8941907352588208;
    EXPECT_EQ(std::stod(shortest_repr(x)), x);
}
