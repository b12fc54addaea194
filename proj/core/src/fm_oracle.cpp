// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/fm_oracle.hpp"

#include <map>
#include <string>

namespace fourcsp {

LinearSystem::LinearSystem(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("a linear system needs at least one variable");
    }
    fix_variable(0, Rational(0));
}

LinearSystem LinearSystem::from_constraints(std::span<const Constraint4> constraints, int n) {
    LinearSystem sys(n);
    for (const auto& c : constraints) {
        sys.add_constraint(c);
    }
    return sys;
}

void LinearSystem::add_row(std::vector<Rational> coeffs, Rational bound) {
    if (coeffs.size() != static_cast<std::size_t>(n_) + 1) {
        throw std::invalid_argument("row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                    std::to_string(n_ + 1));
    }
    rows_.push_back(LinearRow{std::move(coeffs), std::move(bound)});
}

void LinearSystem::add_constraint(const Constraint4& c) {
    if (c.m.is_infinite()) {
        return;
    }
    const NormalVector v = normal_vector(c, n_);
    std::vector<Rational> coeffs(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        coeffs[k] = v[k];
    }
    add_row(std::move(coeffs), c.m.value());
}

void LinearSystem::fix_variable(VarId v, const Rational& value) {
    std::vector<Rational> up(static_cast<std::size_t>(n_) + 1);
    up.at(static_cast<std::size_t>(v)) = 1;
    std::vector<Rational> down(up.size());
    down[static_cast<std::size_t>(v)] = -1;
    add_row(std::move(up), value);
    add_row(std::move(down), Rational(-value));
}

bool LinearSystem::satisfied_by(std::span<const Rational> x) const {
    for (const auto& row : rows_) {
        Rational lhs;
        for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
            lhs += row.coeffs[k] * x[k];
        }
        if (lhs > row.bound) {
            return false;
        }
    }
    return true;
}

namespace {

// Rows keyed by their direction, scaled so the first nonzero coefficient is
// +-1; only the smallest bound per direction is kept.
class Eliminator {
  public:
    Eliminator(std::size_t columns, const FmLimits& limits) : columns_(columns), limits_(limits) {}

    void add(std::vector<Rational> coeffs, Rational bound) {
        std::size_t lead = 0;
        while (lead < coeffs.size() && sgn(coeffs[lead]) == 0) {
            ++lead;
        }
        if (lead == coeffs.size()) {
            if (sgn(bound) < 0) {
                infeasible_ = true;
            }
            return;
        }
        const Rational scale = abs(coeffs[lead]);
        if (scale != 1) {
            for (std::size_t k = lead; k < coeffs.size(); ++k) {
                coeffs[k] /= scale;
            }
            bound /= scale;
        }
        auto [it, inserted] = rows_.try_emplace(std::move(coeffs), bound);
        if (!inserted && bound < it->second) {
            it->second = bound;
        }
        if (rows_.size() > limits_.max_rows) {
            throw FmResourceError("Fourier-Motzkin row limit exceeded (" + std::to_string(limits_.max_rows) + ")");
        }
    }

    void eliminate(std::size_t var) {
        std::vector<std::pair<std::vector<Rational>, Rational>> upper;
        std::vector<std::pair<std::vector<Rational>, Rational>> lower;
        std::map<std::vector<Rational>, Rational> keep;
        for (auto& [coeffs, bound] : rows_) {
            const int s = sgn(coeffs[var]);
            if (s == 0) {
                keep.emplace(coeffs, bound);
                continue;
            }
            // Scale so the eliminated coefficient is +-1.
            const Rational pivot = abs(coeffs[var]);
            std::vector<Rational> scaled = coeffs;
            for (auto& x : scaled) {
                x /= pivot;
            }
            (s > 0 ? upper : lower).emplace_back(std::move(scaled), bound / pivot);
        }
        rows_ = std::move(keep);
        std::vector<Rational> sum(columns_);
        for (const auto& [up, up_bound] : upper) {
            for (const auto& [lo, lo_bound] : lower) {
                for (std::size_t k = 0; k < columns_; ++k) {
                    sum[k] = up[k] + lo[k];
                }
                sum[var] = 0;
                add(sum, Rational(up_bound + lo_bound));
                if (infeasible_) {
                    return;
                }
            }
        }
    }

    [[nodiscard]] bool infeasible() const noexcept { return infeasible_; }
    [[nodiscard]] const std::map<std::vector<Rational>, Rational>& rows() const noexcept { return rows_; }

  private:
    std::size_t columns_;
    FmLimits limits_;
    std::map<std::vector<Rational>, Rational> rows_;
    bool infeasible_ = false;
};

// Eliminates x1..xn then x0 from an eliminator holding the system's rows.
void eliminate_all(Eliminator& elim, int n) {
    for (int v = 1; v <= n && !elim.infeasible(); ++v) {
        elim.eliminate(static_cast<std::size_t>(v));
    }
    if (!elim.infeasible()) {
        elim.eliminate(0);
    }
}

} // namespace

bool fm_feasible(const LinearSystem& sys, const FmLimits& limits) {
    const auto columns = static_cast<std::size_t>(sys.num_vars()) + 1;
    Eliminator elim(columns, limits);
    for (const auto& row : sys.rows()) {
        elim.add(row.coeffs, row.bound);
    }
    eliminate_all(elim, sys.num_vars());
    return !elim.infeasible();
}

Bound fm_tight_bound(const LinearSystem& sys, const NormalVector& objective, const FmLimits& limits) {
    const auto vars = static_cast<std::size_t>(sys.num_vars()) + 1;
    if (objective.size() > vars) {
        throw std::invalid_argument("objective has more coordinates than the system");
    }
    // Extra column t with t - objective . x <= 0; the answer is sup t.
    const std::size_t t = vars;
    Eliminator elim(vars + 1, limits);
    for (const auto& row : sys.rows()) {
        std::vector<Rational> coeffs = row.coeffs;
        coeffs.emplace_back(0);
        elim.add(std::move(coeffs), row.bound);
    }
    std::vector<Rational> goal(vars + 1);
    for (std::size_t k = 0; k < objective.size(); ++k) {
        goal[k] = -objective[k];
    }
    goal[t] = 1;
    elim.add(std::move(goal), Rational(0));
    eliminate_all(elim, sys.num_vars());
    if (elim.infeasible()) {
        throw std::invalid_argument("fm_tight_bound: the system is infeasible");
    }
    Bound best;
    for (const auto& [coeffs, bound] : elim.rows()) {
        if (sgn(coeffs[t]) > 0) {
            best.tighten(Bound(bound));
        }
    }
    return best;
}

} // namespace fourcsp
