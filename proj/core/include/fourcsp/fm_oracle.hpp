// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fourcsp/bound.hpp"
#include "fourcsp/constraint.hpp"

namespace fourcsp {

/// coeffs . (x0..xn) <= bound
struct LinearRow {
    std::vector<Rational> coeffs;
    Rational bound;
};

/// A conjunction of rational inequalities over x0..xn. The constructor adds
/// x0 <= 0 and -x0 <= 0.
class LinearSystem {
  public:
    explicit LinearSystem(int n);

    static LinearSystem from_constraints(std::span<const Constraint4> constraints, int n);

    /// coeffs must have n+1 entries.
    void add_row(std::vector<Rational> coeffs, Rational bound);
    /// Constraints with a +inf bound are skipped.
    void add_constraint(const Constraint4& c);
    /// x_v = value, as two rows.
    void fix_variable(VarId v, const Rational& value);

    [[nodiscard]] int num_vars() const noexcept { return n_; }
    [[nodiscard]] const std::vector<LinearRow>& rows() const noexcept { return rows_; }
    [[nodiscard]] bool satisfied_by(std::span<const Rational> x) const;

  private:
    int n_;
    std::vector<LinearRow> rows_;
};

struct FmLimits {
    /// Rows alive after any elimination step.
    std::size_t max_rows = 200000;
};

/// Raised when elimination exceeds FmLimits; the oracle never guesses.
class FmResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fourier-Motzkin feasibility over the rationals. Eliminates x1..xn in
/// ascending order and x0 last, dropping parallel rows dominated by a
/// tighter one after each step.
bool fm_feasible(const LinearSystem& sys, const FmLimits& limits = {});

/// Exact supremum of objective . x over the polyhedron, +inf if unbounded.
/// Throws std::invalid_argument when the system is infeasible.
Bound fm_tight_bound(const LinearSystem& sys, const NormalVector& objective, const FmLimits& limits = {});

} // namespace fourcsp
