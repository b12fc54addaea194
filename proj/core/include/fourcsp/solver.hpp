// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fourcsp/closure.hpp"
#include "fourcsp/constraint.hpp"
#include "fourcsp/fm_oracle.hpp"
#include "fourcsp/matrix2d.hpp"

namespace fourcsp {

/// [lower, upper]; a missing end is infinite.
struct Interval {
    std::optional<Rational> lower;
    std::optional<Rational> upper;

    [[nodiscard]] bool is_bounded() const noexcept { return lower && upper; }
    [[nodiscard]] bool contains(const Rational& v) const { return (!lower || *lower <= v) && (!upper || v <= *upper); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Values for x0..xn; entry 0 is always 0.
using Valuation = std::vector<Rational>;

struct SolveOptions {
    ClosureOptions closure;
    /// Pin unbounded variables to a finite value and extract a witness anyway.
    bool witness_anyway = false;
    FmLimits fm;
};

struct SolveReport {
    bool feasible = false;
    ClosureResult closed;
    /// n+1 entries; entry 0 is [0, 0]. Empty when infeasible.
    std::vector<Interval> domains;
    std::optional<Valuation> witness;
};

/// Raised when extract_witness is called on an unbounded or infeasible system.
class WitnessError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// [-M_0i00, M_i000] for every variable, x0 included.
std::vector<Interval> reduce_domains(const Matrix2D& closed);

bool is_bounded(const Matrix2D& closed);

/// Pins x1..xn one at a time to their closed upper bounds and re-closes.
/// original is the constraint list the matrix was built from; every pin that
/// the closure cannot certify is checked against Fourier-Motzkin, and a pin
/// the oracle rejects is replaced by the exact supremum of x_i. The returned
/// valuation satisfies every original constraint by exact substitution.
/// Unless options.witness_anyway is set, throws WitnessError for unbounded
/// input. Throws WitnessError for infeasible input.
Valuation extract_witness(const Matrix2D& closed, std::span<const Constraint4> original, Exactness exactness,
                          const SolveOptions& options = {});

/// load, close, reduce domains, extract a witness when bounded.
SolveReport solve(std::span<const Constraint4> constraints, int n, const SolveOptions& options = {});

} // namespace fourcsp
