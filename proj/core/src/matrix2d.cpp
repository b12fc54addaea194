// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/matrix2d.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace fourcsp {

CellClasses::CellClasses(int n) {
    const auto vars = static_cast<std::size_t>(n + 1);
    const std::size_t side = vars * vars;
    class_of_.resize(side * side);
    std::map<std::vector<int>, std::size_t> index;
    std::vector<int> v(vars);
    for (std::size_t p = 0; p < vars; ++p) {
        for (std::size_t q = 0; q < vars; ++q) {
            for (std::size_t i = 0; i < vars; ++i) {
                for (std::size_t j = 0; j < vars; ++j) {
                    std::fill(v.begin(), v.end(), 0);
                    ++v[i];
                    --v[j];
                    --v[p];
                    ++v[q];
                    const std::size_t cell = (p * vars + q) * side + (i * vars + j);
                    auto [it, inserted] = index.try_emplace(v, vectors_.size());
                    if (inserted) {
                        vectors_.emplace_back(v);
                        members_.emplace_back();
                    }
                    class_of_[cell] = it->second;
                    members_[it->second].push_back(cell);
                }
            }
        }
    }
    zero_class_ = index.at(std::vector<int>(vars, 0));
    double_of_.assign(vectors_.size(), npos);
    for (std::size_t c = 0; c < vectors_.size(); ++c) {
        if (c == zero_class_) {
            continue;
        }
        std::vector<int> twice = vectors_[c].coeffs();
        for (int& x : twice) {
            x *= 2;
        }
        if (const auto it = index.find(twice); it != index.end()) {
            double_of_[c] = it->second;
        }
    }
}

std::shared_ptr<const CellClasses> CellClasses::for_size(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CellClasses>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_shared<const CellClasses>(n);
    }
    return slot;
}

std::size_t CellClasses::find(const NormalVector& v) const {
    // Any quadruple with this vector will do; the vector fixes the multiset of
    // positive and negative indices.
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (int r = 0; r < std::abs(v[k]); ++r) {
            (v[k] > 0 ? pos : neg).push_back(k);
        }
    }
    const std::size_t vars = v.size();
    if (pos.size() > 2 || neg.size() > 2 || vars * vars * vars * vars != class_of_.size()) {
        return npos;
    }
    pos.resize(2, 0);
    neg.resize(2, 0);
    const std::size_t side = vars * vars;
    const std::size_t cell = (neg[1] * vars + pos[1]) * side + (pos[0] * vars + neg[0]);
    return class_of_[cell];
}

Matrix2D::Matrix2D(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("a 2D-DBM needs at least one variable");
    }
    if (n > kMaxVars) {
        throw std::length_error("2D-DBM size limit exceeded: n = " + std::to_string(n) + " > " +
                                std::to_string(kMaxVars));
    }
    side_ = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1);
    classes_ = CellClasses::for_size(n);
    cells_.resize(side_ * side_);
    for (const std::size_t cell : classes_->members(classes_->zero_class())) {
        cells_[cell] = Bound(0L);
    }
}

void Matrix2D::check_index(VarId v) const {
    if (v < 0 || v > n_) {
        throw std::out_of_range("variable index " + std::to_string(v) + " outside [0, " + std::to_string(n_) + "]");
    }
}

std::size_t Matrix2D::cell_index(VarId i, VarId j, VarId p, VarId q) const {
    check_index(i);
    check_index(j);
    check_index(p);
    check_index(q);
    return pair_index(p, q) * side_ + pair_index(i, j);
}

const Bound& Matrix2D::get(VarId i, VarId j, VarId p, VarId q) const { return cells_[cell_index(i, j, p, q)]; }

bool Matrix2D::set_min(VarId i, VarId j, VarId p, VarId q, const Bound& b) {
    return cells_[cell_index(i, j, p, q)].tighten(b);
}

bool Matrix2D::normalize() {
    const CellClasses& cls = *classes_;
    std::vector<Bound> mins(cls.num_classes());
    for (std::size_t cell = 0; cell < cells_.size(); ++cell) {
        mins[cls.class_of(cell)].tighten(cells_[cell]);
    }
    const Rational half(1, 2);
    const Rational two(2);
    for (std::size_t c = 0; c < cls.num_classes(); ++c) {
        const std::size_t d = cls.double_of(c);
        if (d == CellClasses::npos) {
            continue;
        }
        Bound single = mins[c];
        Bound twice = mins[d];
        if (mins[c].is_finite()) {
            twice.tighten(two * mins[c]);
        }
        if (mins[d].is_finite()) {
            single.tighten(half * mins[d]);
        }
        mins[c] = std::move(single);
        mins[d] = std::move(twice);
    }
    bool changed = false;
    for (std::size_t cell = 0; cell < cells_.size(); ++cell) {
        const Bound& target = mins[cls.class_of(cell)];
        if (cells_[cell] != target) {
            cells_[cell] = target;
            changed = true;
        }
    }
    return changed;
}

const Bound& Matrix2D::zero_cell() const { return cells_[0]; }

Bound Matrix2D::default_value(std::size_t index) const {
    return classes_->class_of(index) == classes_->zero_class() ? Bound(0L) : Bound::infinity();
}

Matrix2D new_matrix(int n) { return Matrix2D(n); }

Matrix2D load(std::span<const Constraint4> constraints, int n) {
    Matrix2D m(n);
    for (const auto& c : constraints) {
        m.set_min(c.i, c.j, c.p, c.q, c.m);
    }
    m.normalize();
    return m;
}

Matrix2D from_dbm(const std::vector<std::vector<Bound>>& dbm) {
    const std::size_t size = dbm.size();
    if (size < 2) {
        throw std::invalid_argument("a DBM needs at least two rows (x0 and one variable)");
    }
    for (const auto& row : dbm) {
        if (row.size() != size) {
            throw std::invalid_argument("DBM is not square");
        }
    }
    Matrix2D m(static_cast<int>(size) - 1);
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t l = 0; l < size; ++l) {
            m.set_min(static_cast<VarId>(l), static_cast<VarId>(k), 0, 0, dbm[k][l]);
        }
    }
    m.normalize();
    return m;
}

Matrix2D normalize(Matrix2D m) {
    m.normalize();
    return m;
}

nlohmann::json to_json(const Matrix2D& m) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t row = 0; row < m.side(); ++row) {
        for (std::size_t col = 0; col < m.side(); ++col) {
            const std::size_t index = row * m.side() + col;
            if (m.cell(index) != m.default_value(index)) {
                cells.push_back(nlohmann::json::array({row, col, m.cell(index).str()}));
            }
        }
    }
    return nlohmann::json{{"n", m.num_vars()}, {"cells", std::move(cells)}};
}

Matrix2D matrix_from_json(const nlohmann::json& j) {
    try {
        Matrix2D m(j.at("n").get<int>());
        for (const auto& entry : j.at("cells")) {
            if (!entry.is_array() || entry.size() != 3) {
                throw std::invalid_argument("cell entries must be [row, col, bound]");
            }
            const auto row = entry[0].get<std::size_t>();
            const auto col = entry[1].get<std::size_t>();
            if (row >= m.side() || col >= m.side()) {
                throw std::invalid_argument("cell index out of range");
            }
            m.mutable_cell(row * m.side() + col) = Bound::parse(entry[2].get<std::string>());
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed 2D-DBM JSON: ") + e.what());
    }
}

} // namespace fourcsp
