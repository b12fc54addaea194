// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fourcsp/bound.hpp"

namespace fourcsp {

/// Index of a variable. 0 is the reserved variable x0, which is always 0.
using VarId = int;

/// (x_i - x_j) - (x_p - x_q) <= m.
///
/// Positions that are absent in the written constraint hold x0. A bound of
/// +inf marks an absent constraint and is never produced by the parser.
struct Constraint4 {
    VarId i = 0;
    VarId j = 0;
    VarId p = 0;
    VarId q = 0;
    Bound m;

    friend bool operator==(const Constraint4&, const Constraint4&) = default;
};

/// Integer vector e_i - e_j - e_p + e_q over x0..xn.
///
/// The x0 coordinate is kept. Entries of vectors built from constraints are in
/// [-2, 2] and sum to zero; the lindep routines also accept arbitrary integer
/// families through this type.
class NormalVector {
  public:
    NormalVector() = default;
    explicit NormalVector(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

    static NormalVector zero(std::size_t size) { return NormalVector(std::vector<int>(size, 0)); }

    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] int operator[](std::size_t k) const { return coeffs_[k]; }
    [[nodiscard]] const std::vector<int>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept;

    NormalVector operator-() const;
    friend NormalVector operator+(const NormalVector& a, const NormalVector& b);
    friend auto operator<=>(const NormalVector&, const NormalVector&) = default;
    friend bool operator==(const NormalVector&, const NormalVector&) = default;

  private:
    std::vector<int> coeffs_;
};

/// Raised for malformed constraint text. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Parses one constraint such as `x1 + x2 - x3 - x4 <= 4` or `x2 - x1 >= -3/2`
/// into canonical form. Variables are written xK; x0 may appear and stands for
/// the constant 0. A `>=` relation is turned into `<=` by negating both sides.
/// Positive occurrences fill i then q, negative ones fill j then p.
Constraint4 parse_atomic(std::string_view text, int n);

/// A parsed constraint file.
struct ConstraintSystem {
    int n = 1;
    std::vector<Constraint4> constraints;
};

/// Parses one constraint per line; `#` starts a comment. When n is not given it
/// is the largest variable index seen (at least 1).
ConstraintSystem parse_system(std::string_view text, std::optional<int> n = std::nullopt);

/// c_{jiqp}: permutes the indices and keeps the bound field as is.
Constraint4 complement(const Constraint4& c);

NormalVector normal_vector(const Constraint4& c, int n);

/// Largest variable index used by any constraint (at least 1).
int max_var_index(std::span<const Constraint4> constraints);

/// Renders the linear form, e.g. `x1 - x2 - x3 <= 8`; parse_atomic reads it back.
std::string to_string(const Constraint4& c);

/// Exact check of (v_i - v_j) - (v_p - v_q) <= m. valuation[0] must be 0.
bool satisfies(const Constraint4& c, std::span<const Rational> valuation);

} // namespace fourcsp
