#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"

using namespace argcount;

namespace {

double eigen_radius(const ArgumentationFramework &af) {
    const auto d = oracle::dense(af);
    const auto n = static_cast<Eigen::Index>(af.size());
    const double norm = oracle::inf_norm(d);
    if (norm == 0) return 0.0;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = d[i][j] / norm;
    return Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace

TEST(Estimate, IterationTableAtRhoOne) {
    EXPECT_EQ(estimate_iterations(1e-5, 0.97, 1.0).k_max_ceil, 378u);
    EXPECT_EQ(estimate_iterations(1e-5, 0.98, 1.0).k_max_ceil, 570u);
    EXPECT_EQ(estimate_iterations(1e-5, 0.99, 1.0).k_max_ceil, 1146u);
    EXPECT_NEAR(estimate_iterations(1e-5, 0.98, 1.0).k_max, std::log(1e-5) / std::log(0.98), 1e-9);
}

TEST(Estimate, EdgeCases) {
    EXPECT_EQ(estimate_iterations(1e-3, 0.9, 0.0).k_max_ceil, 1u);
    EXPECT_THROW(estimate_iterations(0.0, 0.9, 1.0), std::invalid_argument);
    EXPECT_THROW(estimate_iterations(1e-3, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(estimate_iterations(1e-3, 0.9, 1.5), std::invalid_argument);
    EXPECT_THROW(estimate_iterations(1e-3, 0.9, -0.1), std::invalid_argument);
}

TEST(Estimate, SmallerRadiusNeedsFewerIterations) {
    const auto slow = estimate_iterations(1e-6, 0.95, 1.0);
    const auto fast = estimate_iterations(1e-6, 0.95, 0.5);
    EXPECT_LT(fast.k_max, slow.k_max);
}

TEST(Estimate, DefaultCapCoversWorstCase) {
    EXPECT_EQ(default_max_iterations(0.5, 1e-3), 1000u);
    EXPECT_GE(default_max_iterations(0.999, 1e-12), estimate_iterations(1e-12, 0.999, 1.0).k_max_ceil);
}

TEST(SpectralRadius, SampleFourIsGoldenQuarter) {
    EXPECT_NEAR(spectral_radius(oracle::sample4().attack_matrix()), (1.0 + std::sqrt(5.0)) / 4.0, 1e-9);
}

TEST(SpectralRadius, SpecialShapes) {
    EXPECT_EQ(spectral_radius(ArgumentationFramework({"a", "b"}, {}).attack_matrix()), 0.0);
    EXPECT_EQ(spectral_radius(oracle::load("corpus/chain.apx").attack_matrix()), 0.0);
    EXPECT_EQ(spectral_radius(oracle::load("corpus/binary_tree.apx").attack_matrix()), 0.0);
    EXPECT_NEAR(spectral_radius(ArgumentationFramework({"a", "b"}, {{0, 1}, {1, 0}}).attack_matrix()), 1.0, 1e-12);
    EXPECT_NEAR(spectral_radius(ArgumentationFramework({"a"}, {{0, 0}}).attack_matrix()), 1.0, 1e-12);
    // Odd and even cycles are periodic; the shifted iteration still converges.
    EXPECT_NEAR(spectral_radius(oracle::load("corpus/odd_cycle.apx").attack_matrix()), 1.0, 1e-9);
    EXPECT_NEAR(spectral_radius(oracle::load("corpus/even_cycle.apx").attack_matrix()), 1.0, 1e-9);
    // A self-attacker next to a two-attacker target: trivial block with a loop contributes 1/N.
    EXPECT_NEAR(spectral_radius(ArgumentationFramework({"a", "b", "c"}, {{0, 0}, {0, 2}, {1, 2}}).attack_matrix()),
                0.5, 1e-12);
}

TEST(SpectralRadius, MatchesDenseEigenvalues) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto af = generate_random(2 + seed % 10, 0.08 + 0.04 * static_cast<double>(seed % 10), seed);
        EXPECT_NEAR(spectral_radius(af.attack_matrix()), eigen_radius(af), 1e-7) << "seed " << seed;
    }
}

TEST(SpectralRadius, BoundedByOne) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto af = generate_random(9, 0.6, seed);
        const double r = spectral_radius(af.attack_matrix());
        EXPECT_GE(r, 0.0);
        EXPECT_LE(r, 1.0);
    }
}

TEST(SpectralRadius, EstimateMatchesObservedContraction) {
    // With rho measured, the estimate should not undershoot the iterations actually used by much.
    const auto af = oracle::sample4();
    const double rho = spectral_radius(af.attack_matrix());
    const auto est = estimate_iterations(1e-8, 0.9, rho);
    const auto run = solve_counting(af.attack_matrix(), 0.9, 1e-8);
    EXPECT_LE(run.iterations, est.k_max_ceil + 5);
}
