// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fourcsp/bound.hpp"
#include "fourcsp/constraint.hpp"

namespace fourcsp {

/// Partition of the (n+1)^4 cells by normal vector, shared by all matrices of
/// one size. Cells in one class bound the same linear form.
class CellClasses {
  public:
    explicit CellClasses(int n);

    static std::shared_ptr<const CellClasses> for_size(int n);

    [[nodiscard]] std::size_t class_of(std::size_t cell) const { return class_of_[cell]; }
    [[nodiscard]] std::size_t num_classes() const noexcept { return vectors_.size(); }
    [[nodiscard]] std::span<const std::size_t> members(std::size_t cls) const { return members_[cls]; }
    [[nodiscard]] const NormalVector& vector(std::size_t cls) const { return vectors_[cls]; }
    [[nodiscard]] std::size_t zero_class() const noexcept { return zero_class_; }

    /// Class whose vector is twice this one's (the M_ijji / M_ij00 pairing), or npos.
    [[nodiscard]] std::size_t double_of(std::size_t cls) const { return double_of_[cls]; }

    /// Class of the given normal vector, or npos if no quadruple produces it.
    [[nodiscard]] std::size_t find(const NormalVector& v) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<NormalVector> vectors_;
    std::vector<std::size_t> double_of_;
    std::size_t zero_class_ = 0;
};

/// The 2D-DBM: a dense (n+1)^2 x (n+1)^2 matrix of bounds. The cell at row
/// p(n+1)+q, column i(n+1)+j holds M_ijpq, the bound on (x_i - x_j) - (x_p - x_q).
class Matrix2D {
  public:
    /// Largest supported n. Storage is (n+1)^4 bounds.
    static constexpr int kMaxVars = 24;

    /// All cells +inf except the zero-vector cells, which hold 0.
    explicit Matrix2D(int n);

    [[nodiscard]] int num_vars() const noexcept { return n_; }
    [[nodiscard]] std::size_t side() const noexcept { return side_; }
    [[nodiscard]] std::size_t num_cells() const noexcept { return cells_.size(); }
    [[nodiscard]] std::size_t pair_index(VarId a, VarId b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(b);
    }
    [[nodiscard]] std::size_t cell_index(VarId i, VarId j, VarId p, VarId q) const;

    /// Throws std::out_of_range on a bad index.
    [[nodiscard]] const Bound& get(VarId i, VarId j, VarId p, VarId q) const;
    /// Stores min(current, b). Returns true if the cell changed.
    bool set_min(VarId i, VarId j, VarId p, VarId q, const Bound& b);

    [[nodiscard]] const Bound& at(std::size_t row, std::size_t col) const { return cells_[row * side_ + col]; }
    [[nodiscard]] const Bound& cell(std::size_t index) const { return cells_[index]; }
    [[nodiscard]] Bound& mutable_cell(std::size_t index) { return cells_[index]; }

    /// Unifies every vector class at its minimum and enforces M_ijji = 2 M_ij00
    /// by mutual min. Returns true if any cell changed.
    bool normalize();

    /// Value shared by all zero-vector cells after normalize(); negative means infeasible.
    [[nodiscard]] const Bound& zero_cell() const;

    /// Default value of a cell in a fresh matrix (0 for zero-vector cells, +inf otherwise).
    [[nodiscard]] Bound default_value(std::size_t index) const;

    [[nodiscard]] const CellClasses& classes() const noexcept { return *classes_; }

    friend bool operator==(const Matrix2D& a, const Matrix2D& b) { return a.n_ == b.n_ && a.cells_ == b.cells_; }

  private:
    void check_index(VarId v) const;

    int n_;
    std::size_t side_;
    std::shared_ptr<const CellClasses> classes_;
    std::vector<Bound> cells_;
};

Matrix2D new_matrix(int n);

/// A fresh matrix with every constraint's cell lowered to its bound, then normalized.
Matrix2D load(std::span<const Constraint4> constraints, int n);

/// Converts a classic DBM, where dbm[k][l] bounds x_l - x_k, into a 2D-DBM.
/// Throws std::invalid_argument if the input is not square or smaller than 2x2.
Matrix2D from_dbm(const std::vector<std::vector<Bound>>& dbm);

/// Value-returning normalize.
Matrix2D normalize(Matrix2D m);

/// {"n": n, "cells": [[row, col, "p/q" | "inf"], ...]} listing cells that
/// differ from new_matrix(n), in row-major order.
nlohmann::json to_json(const Matrix2D& m);

/// Inverse of to_json. Unknown keys are ignored. Throws std::invalid_argument.
Matrix2D matrix_from_json(const nlohmann::json& j);

} // namespace fourcsp
