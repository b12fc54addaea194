// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fourcsp/constraint.hpp"
#include "fourcsp/matrix2d.hpp"

namespace fourcsp::testing {

/// Closed cells against Fourier-Motzkin suprema, one comparison per vector
/// class (all cells of a class hold one value after normalization).
struct OracleComparison {
    std::size_t classes = 0;
    std::size_t finite = 0;
    std::size_t equal = 0;
    /// Closed cell strictly above the supremum (sound but loose).
    std::size_t above = 0;
    /// Closed cell strictly below the supremum (unsound).
    std::size_t below = 0;
    std::vector<std::string> details;
};

/// Precondition: the constraints are feasible.
OracleComparison compare_with_fm(const Matrix2D& closed, std::span<const Constraint4> constraints);

/// True iff all relations between cells that a closed matrix must satisfy
/// hold: class equality, M_ijji = 2 M_ij00, and both sum inequalities for
/// every intermediate pair. Describes the first failure in why.
bool closed_laws_hold(const Matrix2D& m, std::string* why = nullptr);

} // namespace fourcsp::testing
