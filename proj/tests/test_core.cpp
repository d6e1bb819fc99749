#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace argcount;

TEST(ArgSet, BasicMembership) {
    ArgSet s(70, {0, 3, 69});
    EXPECT_EQ(s.universe(), 70u);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.contains(69));
    EXPECT_FALSE(s.contains(68));
    s.erase(3);
    EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 69}));
    EXPECT_THROW(s.insert(70), InvalidSetError);
    EXPECT_THROW((void)s.contains(70), InvalidSetError);
}

TEST(ArgSet, ComplementStaysInsideUniverse) {
    ArgSet s(67, {1, 66});
    const auto c = s.complement();
    EXPECT_EQ(c.size(), 65u);
    EXPECT_FALSE(c.intersects(s));
    EXPECT_EQ((c | s), ArgSet::full(67));
    EXPECT_TRUE((c & s).empty());
    EXPECT_EQ(ArgSet(0).complement(), ArgSet(0));
}

TEST(ArgSet, SubsetAndMask) {
    const auto a = ArgSet::from_mask(5, 0b10110);
    EXPECT_EQ(a.members(), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_EQ(a.mask(), 0b10110u);
    EXPECT_TRUE(ArgSet(5, {2, 4}).is_subset_of(a));
    EXPECT_FALSE(ArgSet(5, {0}).is_subset_of(a));
    EXPECT_THROW(ArgSet::from_mask(3, 0b1000), InvalidSetError);
}

TEST(ArgSet, MixedUniverseRejected) {
    ArgSet a(4), b(5);
    EXPECT_THROW(a |= b, InvalidSetError);
    EXPECT_THROW((void)a.is_subset_of(b), InvalidSetError);
}

TEST(Framework, ValidatesConstruction) {
    EXPECT_THROW(ArgumentationFramework({"a", "a"}, {}), FrameworkError);
    EXPECT_THROW(ArgumentationFramework({"a", ""}, {}), FrameworkError);
    EXPECT_THROW(ArgumentationFramework({"a"}, {{0, 1}}), FrameworkError);
    EXPECT_THROW(ArgumentationFramework({"a", "b"}, {{0, 1}, {0, 1}}), FrameworkError);
    EXPECT_THROW(ArgumentationFramework::from_names({"a"}, {{"a", "z"}}), FrameworkError);
    EXPECT_NO_THROW(ArgumentationFramework({}, {}));
}

TEST(Framework, SampleFourAttackMatrix) {
    const auto af = oracle::sample4();
    const auto &a = af.attack_matrix();
    const int expected[4][4] = {{0, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 0}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a.entry(i, j), expected[i][j]) << i << "," << j;
    EXPECT_EQ(a.norm(), 2);
    EXPECT_DOUBLE_EQ(a.normalized(1, 2), 0.5);
    EXPECT_EQ(a.nonzeros(), 5u);
}

TEST(Framework, AttackFreeMatrixHasZeroNorm) {
    const ArgumentationFramework af({"a", "b", "c"}, {});
    const auto &a = af.attack_matrix();
    EXPECT_EQ(a.norm(), 0);
    std::vector<double> x{1, 1, 1}, y(3, 5.0);
    a.scaled_normalized_multiply(0.9, x, y);
    for (double v : y) EXPECT_EQ(v, 0.0);
}

TEST(Framework, SparseAndDenseProductsAgree) {
    // 70 arguments is above the dense threshold; the first 10 form a copy below it.
    std::mt19937_64 rng(3);
    std::vector<Attack> att;
    for (std::size_t i = 0; i < 70; ++i)
        for (std::size_t j = 0; j < 70; ++j)
            if (unit_draw(rng) < 0.1) att.push_back({i, j});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < 70; ++i) names.push_back("n" + std::to_string(i));
    const ArgumentationFramework af(names, att);
    const auto &a = af.attack_matrix();
    EXPECT_FALSE(a.size() < AttackMatrix::dense_threshold);
    std::vector<double> x(70), y(70);
    for (auto &v : x) v = unit_draw(rng);
    a.multiply<double>(x, y);
    const auto d = oracle::dense(af);
    for (std::size_t i = 0; i < 70; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < 70; ++j) s += d[i][j] * x[j];
        EXPECT_NEAR(y[i], s, 1e-12);
    }
}

TEST(Framework, AttackersDefendersAndDefence) {
    const auto af = oracle::sample4();
    EXPECT_EQ(attackers(af, af.set_of({"x2"})), af.set_of({"x3", "x4"}));
    EXPECT_EQ(attacked_by(af, af.set_of({"x2"})), af.set_of({"x1", "x3"}));
    EXPECT_EQ(defenders_of(af, af.require_index("x1")), af.set_of({"x3", "x4"}));
    EXPECT_TRUE(is_conflict_free(af, af.set_of({"x1", "x4"})));
    EXPECT_FALSE(is_conflict_free(af, af.set_of({"x3"})));
    EXPECT_TRUE(defends(af, af.set_of({"x4"}), af.require_index("x1")));
    EXPECT_FALSE(defends(af, ArgSet(4), af.require_index("x1")));
    EXPECT_THROW(attackers(af, ArgSet(5)), InvalidSetError);
    EXPECT_THROW(af.require_index("x9"), InvalidSetError);
}

TEST(Framework, ComponentsAndSubframeworks) {
    const auto af = oracle::load("corpus/star_chain.apx");
    const auto comps = component_sets(af);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(af.names_of(comps[0]), (std::vector<std::string>{"s1", "s2", "s3", "t"}));
    const auto parts = weak_connected_components(af);
    EXPECT_EQ(parts[1].names(), (std::vector<std::string>{"u", "w"}));
    EXPECT_EQ(parts[1].attacks().size(), 1u);
    EXPECT_EQ(parts[0].attack_matrix().norm(), 3);
    EXPECT_EQ(parts[1].attack_matrix().norm(), 1);
}

TEST(Framework, CopiesShareEqualMatrices) {
    const auto af = oracle::sample4();
    const auto copy = af;
    EXPECT_EQ(af, copy);
    EXPECT_EQ(&af.attack_matrix(), &copy.attack_matrix());
}
