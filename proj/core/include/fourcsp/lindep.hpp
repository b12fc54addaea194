// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fourcsp/bound.hpp"
#include "fourcsp/constraint.hpp"

namespace fourcsp {

// Positive linear dependence and brute-force hypercycle/hyperpath enumeration.
// Everything here is exponential in the family size and meant as an oracle
// for desk-scale instances, not as a production path.

struct LindepLimits {
    /// Largest family handed to positive_dependence / is_simple / unique_coeffs.
    std::size_t max_family = 16;
    /// Largest constraint list handed to the enumerators.
    std::size_t max_constraints = 16;
};

class LindepLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotSimpleError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Strictly positive integer coefficients (coprime) with sum(l_k V_k) = 0, or
/// nullopt when no strictly positive combination vanishes. Vectors must be
/// nonzero, pairwise distinct and of equal length.
std::optional<std::vector<Rational>> positive_dependence(std::span<const NormalVector> vectors,
                                                         const LindepLimits& limits = {});

/// True iff the family is positively dependent and no proper subfamily is.
bool is_simple(std::span<const NormalVector> vectors, const LindepLimits& limits = {});

/// U(f): the minimal positive integer solution of a simple family, unique up
/// to scaling. Throws NotSimpleError otherwise.
std::vector<Rational> unique_coeffs(std::span<const NormalVector> vectors, const LindepLimits& limits = {});

/// Constraints with positive multipliers. As a hypercycle the multipliers are
/// coprime integers; as a hyperpath they are relative to a unit coefficient
/// on the complement of the target.
struct WeightedFamily {
    std::vector<Constraint4> members;
    std::vector<Rational> coeffs;
};

struct HyperPath {
    WeightedFamily path;
    Constraint4 target;
};

/// Default for max_size when the caller has no better bound.
inline constexpr std::size_t kDefaultMaxCycleSize = 6;

/// All subsets of at most max_size constraints whose normal vectors form a
/// simple positively dependent family, with U(f) attached. Constraints with a
/// zero normal vector or a +inf bound never take part.
std::vector<WeightedFamily> enumerate_simple_hcycles(std::span<const Constraint4> constraints, std::size_t max_size,
                                                     const LindepLimits& limits = {});

/// sum(l_k * m_k); +inf if any member bound is +inf.
Bound cycle_weight(const WeightedFamily& f);

/// Same with bounds supplied in member order instead of the members' own.
Bound cycle_weight(const WeightedFamily& f, std::span<const Bound> bounds);

struct MinWeight {
    Bound weight;
    std::optional<HyperPath> path;
};

/// Minimum weight over all simple hyperpaths of target made of at most
/// max_size constraints. +inf with no path when none exists. Throws
/// std::invalid_argument for a target with a zero normal vector.
MinWeight min_weight_path(const Constraint4& target, std::span<const Constraint4> constraints, std::size_t max_size,
                          const LindepLimits& limits = {});

Bound min_weight_bruteforce(const Constraint4& target, std::span<const Constraint4> constraints, std::size_t max_size,
                            const LindepLimits& limits = {});

} // namespace fourcsp
