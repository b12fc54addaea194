// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "fourcsp/constraint.hpp"
#include "fourcsp/matrix2d.hpp"

namespace fourcsp {

/// Syntactic subclass of a constraint set. Octagon: every constraint is
/// +-x_i +-x_j <= k. UpperBound: x_i - x_j <= x_p + k. LowerBound:
/// x_p <= x_i - x_j + k. Any of the indices may be x0.
enum class Subclass { Octagon, UpperBound, LowerBound, General };

/// Whether the closure is the exact canonical form or only an upper approximation.
enum class Exactness { Exact, UpperApprox };

std::string_view to_string(Subclass s);
std::string_view to_string(Exactness e);

struct ClosureOptions {
    /// Lowers the sweep cap. Values above the default cap are clamped to it.
    std::optional<long> max_sweeps;
};

struct ClosureResult {
    Matrix2D matrix;
    bool feasible = true;
    long sweeps_used = 0;
    Exactness exactness = Exactness::UpperApprox;
    /// False when the loop stopped early (infeasibility or the sweep cap).
    bool stationary = false;
};

/// ceil((n+1)^4 / 2).
long sweep_cap(int n);

/// Hypergraph closure. Each sweep visits every cell (row-major) and every
/// intermediate pair (k, l), applying
///   M_ijpq := min(M_ijpq, M_ijkl + M_klpq, M_iklq + M_kjpl),
/// then normalizes. Stops once a sweep changes nothing, after the sweep in
/// which a zero-vector cell turns negative, or at the sweep cap.
/// Precondition: m is normalized. Exactness comes from classifying m's
/// finite cells.
ClosureResult close(Matrix2D m, const ClosureOptions& options = {});

/// Same, with the exactness supplied by the caller (e.g. from the original
/// constraint list when m already holds derived cells).
ClosureResult close(Matrix2D m, Exactness exactness, const ClosureOptions& options = {});

Subclass classify(std::span<const Constraint4> constraints);

/// Classifies the linear forms of all non-default cells.
Subclass classify(const Matrix2D& m);

Exactness exactness_of(Subclass sub);

/// Shape predicates on one normal vector (the x0 coordinate is ignored).
bool is_octagon_form(const NormalVector& v);
bool is_upper_bound_form(const NormalVector& v);
bool is_lower_bound_form(const NormalVector& v);

} // namespace fourcsp
