// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "apsp.hpp"
#include "fourcsp/fm_oracle.hpp"
#include "fourcsp/lindep.hpp"
#include "generators.hpp"

namespace fourcsp {
namespace {

std::vector<Rational> R(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<NormalVector> vectors_of(const std::vector<Constraint4>& cs, int n) {
    std::vector<NormalVector> out;
    for (const auto& c : cs) {
        out.push_back(normal_vector(c, n));
    }
    return out;
}

std::vector<Constraint4> cycle_sum() {
    return parse_system("x1 - x2 - x3 <= 3\nx2 - x1 - x4 <= -4\nx3 + x4 <= 5\n").constraints;
}

std::vector<Constraint4> cycle_double() {
    return parse_system("x1 - x2 - x3 <= 3\nx1 + x2 - x3 <= -4\nx3 - x1 <= 5\n", 4).constraints;
}

TEST(PositiveDependence, UnitCoefficients) {
    EXPECT_EQ(positive_dependence(vectors_of(cycle_sum(), 4)), R({1, 1, 1}));
}

TEST(PositiveDependence, DoubledCoefficient) {
    EXPECT_EQ(positive_dependence(vectors_of(cycle_double(), 4)), R({1, 1, 2}));
}

TEST(PositiveDependence, VectorAndItsNegation) {
    const NormalVector v({0, 1, -2, 1});
    EXPECT_EQ(positive_dependence(std::vector<NormalVector>{v, -v}), R({1, 1}));
}

TEST(PositiveDependence, IndependentFamilies) {
    EXPECT_EQ(positive_dependence(std::vector<NormalVector>{NormalVector({1, -1, 0}), NormalVector({0, 1, -1})}),
              std::nullopt);
    // linearly dependent, but only with a negative coefficient
    EXPECT_EQ(positive_dependence(std::vector<NormalVector>{NormalVector({1, 0}), NormalVector({2, 0})}), std::nullopt);
    EXPECT_EQ(positive_dependence(std::vector<NormalVector>{}), std::nullopt);
}

TEST(PositiveDependence, NonSimpleFamilyCoveredByTwoCycles) {
    const NormalVector v({1, -1, 0}), w({0, 1, -1});
    const auto l = positive_dependence(std::vector<NormalVector>{v, -v, w, -w});
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(l->size(), 4U);
    for (const auto& x : *l) {
        EXPECT_GT(x, 0);
    }
}

TEST(PositiveDependence, PartlyCoveredFamilyIsNotDependent) {
    const NormalVector v({1, -1, 0}), w({0, 1, -1});
    EXPECT_EQ(positive_dependence(std::vector<NormalVector>{v, -v, w}), std::nullopt);
}

TEST(PositiveDependence, PreconditionsAndLimits) {
    const NormalVector v({1, -1});
    EXPECT_THROW(positive_dependence(std::vector<NormalVector>{v, v}), std::invalid_argument);
    EXPECT_THROW(positive_dependence(std::vector<NormalVector>{v, NormalVector({0, 0})}), std::invalid_argument);
    EXPECT_THROW(positive_dependence(std::vector<NormalVector>{v, NormalVector({0, 0, 1})}), std::invalid_argument);
    std::vector<NormalVector> big;
    for (int k = 1; k <= 5; ++k) {
        big.push_back(NormalVector({k, -k}));
    }
    EXPECT_THROW(positive_dependence(big, LindepLimits{4, 16}), LindepLimitError);
}

TEST(IsSimple, Examples) {
    EXPECT_TRUE(is_simple(vectors_of(cycle_sum(), 4)));
    const NormalVector v({1, -1, 0}), w({0, 1, -1});
    EXPECT_FALSE(is_simple(std::vector<NormalVector>{v, -v, w, -w}));
    EXPECT_TRUE(is_simple(std::vector<NormalVector>{w, -w}));
    EXPECT_FALSE(is_simple(std::vector<NormalVector>{v, w}));
}

TEST(UniqueCoeffs, Examples) {
    EXPECT_EQ(unique_coeffs(vectors_of(cycle_double(), 4)), R({1, 1, 2}));
    const NormalVector v({2, -1, -1});
    EXPECT_EQ(unique_coeffs(std::vector<NormalVector>{v, -v}), R({1, 1}));
    const NormalVector w({0, 1, -1});
    EXPECT_THROW(unique_coeffs(std::vector<NormalVector>{v, -v, w, -w}), NotSimpleError);
}

TEST(UniqueCoeffs, InvariantUnderPermutation) {
    auto family = vectors_of(cycle_double(), 4);
    const auto base = unique_coeffs(family);
    std::vector<std::size_t> order{0, 1, 2};
    while (std::next_permutation(order.begin(), order.end())) {
        std::vector<NormalVector> permuted;
        for (auto k : order) {
            permuted.push_back(family[k]);
        }
        const auto coeffs = unique_coeffs(permuted);
        for (std::size_t k = 0; k < order.size(); ++k) {
            EXPECT_EQ(coeffs[k], base[order[k]]);
        }
    }
}

TEST(EnumerateHcycles, Examples) {
    const auto cycles = enumerate_simple_hcycles(cycle_sum(), 6);
    ASSERT_EQ(cycles.size(), 1U);
    EXPECT_EQ(cycles[0].coeffs, R({1, 1, 1}));
    EXPECT_EQ(cycle_weight(cycles[0]), Bound(4L));

    const Constraint4 c{1, 2, 3, 0, Bound(2L)};
    const std::vector<Constraint4> pair{c, complement(c)};
    EXPECT_EQ(enumerate_simple_hcycles(pair, 6).size(), 1U);
    EXPECT_TRUE(enumerate_simple_hcycles(std::vector<Constraint4>{}, 6).empty());
}

TEST(EnumerateHcycles, SizeCapAndLimits) {
    EXPECT_TRUE(enumerate_simple_hcycles(cycle_sum(), 2).empty());
    std::vector<Constraint4> many(17, Constraint4{1, 0, 0, 0, Bound(1L)});
    EXPECT_THROW(enumerate_simple_hcycles(many, 6), LindepLimitError);
}

TEST(EnumerateHcycles, SumsToZero) {
    testing::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3;
        const auto sys = testing::random_system(rng, n, 7, Subclass::General);
        for (const auto& f : enumerate_simple_hcycles(sys, 5)) {
            std::vector<Rational> sum(static_cast<std::size_t>(n) + 1);
            for (std::size_t k = 0; k < f.members.size(); ++k) {
                const auto v = normal_vector(f.members[k], n);
                for (std::size_t x = 0; x < v.size(); ++x) {
                    sum[x] += f.coeffs[k] * v[x];
                }
            }
            for (const auto& s : sum) {
                EXPECT_EQ(s, 0);
            }
            EXPECT_TRUE(is_simple(vectors_of(f.members, n)));
        }
    }
}

TEST(CycleWeight, Arithmetic) {
    WeightedFamily f{cycle_sum(), R({1, 1, 2})};
    EXPECT_EQ(cycle_weight(f), Bound(9L));
    const Constraint4 c{1, 2, 0, 0, Bound(3L)};
    Constraint4 cc = complement(c);
    cc.m = Bound(-1L);
    EXPECT_EQ(cycle_weight(WeightedFamily{{c, cc}, R({1, 1})}), Bound(2L));
    const std::vector<Bound> bounds{Bound(1L), Bound::infinity()};
    EXPECT_EQ(cycle_weight(WeightedFamily{{c, cc}, R({1, 1})}, bounds), Bound::infinity());
}

TEST(MinWeight, HyperpathThroughTwoConstraints) {
    const auto cs = cycle_sum();
    const std::vector<Constraint4> path_members{cs[0], cs[1]};
    const Constraint4 target{0, 3, 4, 0, Bound()};
    const MinWeight w = min_weight_path(target, path_members, 6);
    EXPECT_EQ(w.weight, Bound(-1L));
    ASSERT_TRUE(w.path.has_value());
    EXPECT_EQ(w.path->path.members.size(), 2U);
    EXPECT_EQ(w.path->path.coeffs, R({1, 1}));
    EXPECT_EQ(min_weight_bruteforce(target, path_members, 6), Bound(-1L));
}

TEST(MinWeight, NoPath) {
    const auto cs = cycle_sum();
    const Constraint4 target{1, 0, 0, 0, Bound()};
    EXPECT_EQ(min_weight_bruteforce(target, std::vector<Constraint4>{cs[2]}, 6), Bound::infinity());
    EXPECT_FALSE(min_weight_path(target, std::vector<Constraint4>{}, 6).path.has_value());
}

TEST(MinWeight, RejectsZeroTarget) {
    EXPECT_THROW(min_weight_bruteforce(Constraint4{1, 1, 0, 0, Bound()}, cycle_sum(), 6), std::invalid_argument);
}

TEST(MinWeight, HalvedCoefficient) {
    // 2 x1 <= 3 gives x1 <= 3/2
    const std::vector<Constraint4> cs{Constraint4{1, 0, 0, 1, Bound(3L)}};
    const MinWeight w = min_weight_path(Constraint4{1, 0, 0, 0, Bound()}, cs, 6);
    EXPECT_EQ(w.weight, Bound(Rational(3, 2)));
    ASSERT_TRUE(w.path.has_value());
    EXPECT_EQ(w.path->path.coeffs, std::vector<Rational>{Rational(1, 2)});
}

TEST(MinWeight, PotentialConstraintsMatchShortestPaths) {
    testing::Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3;
        auto dbm = testing::random_dbm(rng, n, 0.5, 0, 9);
        const auto cs = testing::dbm_constraints(dbm);
        const auto sp = testing::floyd_warshall(dbm);
        ASSERT_FALSE(sp.negative_cycle);
        for (VarId k = 0; k <= n; ++k) {
            for (VarId l = 0; l <= n; ++l) {
                if (k == l) {
                    continue;
                }
                const Bound w = min_weight_bruteforce(Constraint4{l, k, 0, 0, Bound()}, cs, 6);
                EXPECT_EQ(w, sp.dist[k][l]) << "x" << l << " - x" << k;
            }
        }
    }
}

TEST(MinWeight, MatchesFourierMotzkin) {
    testing::Rng rng(23);
    int compared = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3;
        const Valuation point = testing::random_point(rng, n);
        const auto cs = testing::planted_system(rng, point, 5, Subclass::General);
        const LinearSystem sys = LinearSystem::from_constraints(cs, n);
        const Constraint4 target = testing::random_constraint(rng, n, Subclass::General);
        // five constraints admit at most five path members: the cap is not binding
        EXPECT_EQ(min_weight_bruteforce(target, cs, 6), fm_tight_bound(sys, normal_vector(target, n)));
        ++compared;
    }
    EXPECT_EQ(compared, 30);
}

} // namespace
} // namespace fourcsp
