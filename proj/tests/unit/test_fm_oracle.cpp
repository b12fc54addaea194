// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fourcsp/fm_oracle.hpp"
#include "generators.hpp"

namespace fourcsp {
namespace {

LinearSystem sys_of(const char* text, int n) {
    const auto s = parse_system(text, n);
    return LinearSystem::from_constraints(s.constraints, n);
}

NormalVector objective(const char* form, int n) { return normal_vector(parse_atomic(std::string(form) + " <= 0", n), n); }

TEST(FmFeasible, Examples) {
    EXPECT_TRUE(fm_feasible(sys_of("x1 - x2 - x3 <= 3\nx2 - x1 - x4 <= -4\nx3 + x4 <= 5\n"
                                   "x2 <= 3\nx3 <= 1\nx4 <= 5\nx1 <= 6\n",
                                   4)));
    EXPECT_FALSE(fm_feasible(sys_of("x1 <= 4\nx1 >= 0\nx2 <= 3\nx2 >= 5\nx2 - x1 <= 8\nx2 - x1 >= 6\n", 2)));
    EXPECT_TRUE(fm_feasible(LinearSystem(3)));
}

TEST(FmFeasible, RationalBoundary) {
    // 2 x1 <= 1 and 2 x1 >= 1 leave exactly x1 = 1/2
    EXPECT_TRUE(fm_feasible(sys_of("x1 + x1 <= 1\nx1 + x1 >= 1\n", 1)));
    EXPECT_FALSE(fm_feasible(sys_of("x1 + x1 <= 1\nx1 >= 1\n", 1)));
}

TEST(FmTightBound, Examples) {
    EXPECT_EQ(fm_tight_bound(sys_of("x1 <= 4\n", 1), objective("x1", 1)), Bound(4L));
    EXPECT_EQ(fm_tight_bound(sys_of("x1 - x2 <= 1\nx2 - x3 <= 2\n", 3), objective("x1 - x3", 3)), Bound(3L));
    EXPECT_EQ(fm_tight_bound(sys_of("x1 <= 4\n", 2), objective("x2", 2)), Bound::infinity());
    EXPECT_EQ(fm_tight_bound(sys_of("x1 + x1 <= 3\n", 1), objective("x1", 1)), Bound(Rational(3, 2)));
}

TEST(FmTightBound, InfeasibleSystemThrows) {
    EXPECT_THROW(fm_tight_bound(sys_of("x1 <= 0\nx1 >= 1\n", 1), objective("x1", 1)), std::invalid_argument);
}

TEST(FmLimitsTest, ResourceCapIsReported) {
    testing::Rng rng(3);
    const auto cs = testing::random_system(rng, 6, 40, Subclass::General);
    EXPECT_THROW(fm_feasible(LinearSystem::from_constraints(cs, 6), FmLimits{20}), FmResourceError);
}

TEST(LinearSystemTest, RowsAndSubstitution) {
    LinearSystem sys(2);
    EXPECT_EQ(sys.rows().size(), 2U); // x0 = 0
    sys.add_constraint(Constraint4{1, 2, 0, 0, Bound(1L)});
    sys.add_constraint(Constraint4{1, 0, 0, 0, Bound()});
    EXPECT_EQ(sys.rows().size(), 3U);
    sys.fix_variable(2, Rational(5));
    EXPECT_TRUE(sys.satisfied_by(std::vector<Rational>{0, 6, 5}));
    EXPECT_FALSE(sys.satisfied_by(std::vector<Rational>{0, 7, 5}));
    EXPECT_THROW(sys.add_row({1, 2}, 0), std::invalid_argument);
}

class FmProperties : public ::testing::TestWithParam<int> {};

TEST_P(FmProperties, BoundsAreAttained) {
    testing::Rng rng(static_cast<std::uint64_t>(GetParam()));
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3;
        const Valuation point = testing::random_point(rng, n);
        const auto cs = testing::planted_system(rng, point, 6, Subclass::General);
        const LinearSystem sys = LinearSystem::from_constraints(cs, n);
        ASSERT_TRUE(fm_feasible(sys));
        EXPECT_TRUE(sys.satisfied_by(point));
        const Constraint4 target = testing::random_constraint(rng, n, Subclass::General);
        const NormalVector v = normal_vector(target, n);
        const Bound b = fm_tight_bound(sys, v);
        // the planted point lies below the supremum
        const Rational at_point = (point[target.i] - point[target.j]) - (point[target.p] - point[target.q]);
        EXPECT_LE(Bound(at_point), b);
        if (b.is_infinite()) {
            continue;
        }
        LinearSystem reached = sys;
        std::vector<Rational> neg(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            neg[k] = -v[k];
        }
        reached.add_row(neg, -b.value());
        EXPECT_TRUE(fm_feasible(reached));
        LinearSystem beyond = sys;
        beyond.add_row(neg, -b.value() - Rational(1, 1000));
        EXPECT_FALSE(fm_feasible(beyond));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FmProperties, ::testing::Values(31, 32, 33));

} // namespace
} // namespace fourcsp
