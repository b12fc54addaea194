// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/closure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace fourcsp {

std::string_view to_string(Subclass s) {
    switch (s) {
    case Subclass::Octagon: return "Octagon";
    case Subclass::UpperBound: return "UpperBound";
    case Subclass::LowerBound: return "LowerBound";
    case Subclass::General: return "General";
    }
    return "General";
}

std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "Exact" : "UpperApprox"; }

long sweep_cap(int n) {
    const long vars = n + 1;
    const long cells = vars * vars * vars * vars;
    return (cells + 1) / 2;
}

namespace {

// Double shadow of a cell: +inf for an infinite bound, NaN when the value
// does not fit a double.
double approx(const Bound& b) {
    if (b.is_infinite()) {
        return std::numeric_limits<double>::infinity();
    }
    const double d = b.value().get_d();
    return std::isfinite(d) ? d : std::numeric_limits<double>::quiet_NaN();
}

// True when a + b >= c is certain from the shadows alone.
bool cannot_tighten(double a, double b, double c) {
    const double slack = 1e-12 * (std::fabs(a) + std::fabs(b) + std::fabs(c)) + 1e-290;
    return a + b > c + slack;
}

// One pass over all cells. Returns true if anything tightened.
bool sweep(Matrix2D& m, Rational& scratch, std::vector<double>& shadow) {
    const auto vars = static_cast<std::size_t>(m.num_vars() + 1);
    const std::size_t side = m.side();
    shadow.resize(m.num_cells());
    for (std::size_t c = 0; c < m.num_cells(); ++c) {
        shadow[c] = approx(m.cell(c));
    }
    bool changed = false;
    const auto relax = [&](std::size_t target, std::size_t a, std::size_t b) {
        if (cannot_tighten(shadow[a], shadow[b], shadow[target])) {
            return;
        }
        Bound& cur = m.mutable_cell(target);
        if (cur.tighten_sum(m.cell(a), m.cell(b), scratch)) {
            shadow[target] = approx(cur);
            changed = true;
        }
    };
    for (std::size_t p = 0; p < vars; ++p) {
        for (std::size_t q = 0; q < vars; ++q) {
            const std::size_t row_pq = p * vars + q;
            for (std::size_t i = 0; i < vars; ++i) {
                for (std::size_t j = 0; j < vars; ++j) {
                    const std::size_t col_ij = i * vars + j;
                    const std::size_t target = row_pq * side + col_ij;
                    for (std::size_t k = 0; k < vars; ++k) {
                        for (std::size_t l = 0; l < vars; ++l) {
                            const std::size_t kl = k * vars + l;
                            // M_ijkl + M_klpq
                            relax(target, kl * side + col_ij, row_pq * side + kl);
                            // M_iklq + M_kjpl
                            relax(target, (l * vars + q) * side + (i * vars + k), (p * vars + l) * side + (k * vars + j));
                        }
                    }
                }
            }
        }
    }
    return changed;
}

struct Shape {
    int positive = 0;
    int negative = 0;
};

// Occurrence counts of the primitive form: 2x1 - 2x2 counts as x1 - x2.
Shape shape_of(const NormalVector& v) {
    int g = 0;
    for (std::size_t k = 1; k < v.size(); ++k) {
        g = std::gcd(g, v[k]);
    }
    Shape s;
    for (std::size_t k = 1; k < v.size(); ++k) {
        (v[k] > 0 ? s.positive : s.negative) += std::abs(v[k]) / std::max(g, 1);
    }
    return s;
}

Subclass classify_vectors(const std::vector<NormalVector>& vectors) {
    const auto all = [&](auto pred) { return std::all_of(vectors.begin(), vectors.end(), pred); };
    if (all(is_octagon_form)) {
        return Subclass::Octagon;
    }
    if (all(is_upper_bound_form)) {
        return Subclass::UpperBound;
    }
    if (all(is_lower_bound_form)) {
        return Subclass::LowerBound;
    }
    return Subclass::General;
}

} // namespace

bool is_octagon_form(const NormalVector& v) {
    const Shape s = shape_of(v);
    return s.positive + s.negative <= 2;
}

bool is_upper_bound_form(const NormalVector& v) {
    const Shape s = shape_of(v);
    return s.positive <= 1 && s.negative <= 2;
}

bool is_lower_bound_form(const NormalVector& v) {
    const Shape s = shape_of(v);
    return s.positive <= 2 && s.negative <= 1;
}

ClosureResult close(Matrix2D m, const ClosureOptions& options) {
    const Exactness exactness = exactness_of(classify(m));
    return close(std::move(m), exactness, options);
}

ClosureResult close(Matrix2D m, Exactness exactness, const ClosureOptions& options) {
    const long default_cap = sweep_cap(m.num_vars());
    const long cap = std::clamp(options.max_sweeps.value_or(default_cap), 1L, default_cap);
    const Bound zero(0L);
    Rational scratch;
    std::vector<double> shadow;
    long sweeps = 0;
    bool stationary = false;
    while (sweeps < cap) {
        ++sweeps;
        bool changed = sweep(m, scratch, shadow);
        changed |= m.normalize();
        if (!changed) {
            stationary = true;
            break;
        }
        if (m.zero_cell() < zero) {
            break;
        }
    }
    const bool feasible = !(m.zero_cell() < zero);
    return ClosureResult{std::move(m), feasible, sweeps, exactness, stationary};
}

Subclass classify(std::span<const Constraint4> constraints) {
    std::vector<NormalVector> vectors;
    for (const auto& c : constraints) {
        if (c.m.is_finite()) {
            vectors.push_back(normal_vector(c, std::max({c.i, c.j, c.p, c.q, 1})));
        }
    }
    return classify_vectors(vectors);
}

Subclass classify(const Matrix2D& m) {
    const CellClasses& cls = m.classes();
    std::vector<bool> used(cls.num_classes(), false);
    for (std::size_t cell = 0; cell < m.num_cells(); ++cell) {
        if (m.cell(cell) != m.default_value(cell)) {
            used[cls.class_of(cell)] = true;
        }
    }
    std::vector<NormalVector> vectors;
    for (std::size_t c = 0; c < used.size(); ++c) {
        if (used[c] && c != cls.zero_class()) {
            vectors.push_back(cls.vector(c));
        }
    }
    return classify_vectors(vectors);
}

Exactness exactness_of(Subclass sub) { return sub == Subclass::General ? Exactness::UpperApprox : Exactness::Exact; }

} // namespace fourcsp
