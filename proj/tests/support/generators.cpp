// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace fourcsp::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Occurrence counts allowed for each shape; at least one variable overall.
std::pair<int, int> draw_counts(Rng& rng, int n, Subclass shape) {
    const int cap = std::min(n, 4);
    while (true) {
        int pos = 0;
        int neg = 0;
        switch (shape) {
        case Subclass::Octagon:
            pos = uniform(rng, 0, 2);
            neg = uniform(rng, 0, 2 - pos);
            break;
        case Subclass::UpperBound:
            pos = uniform(rng, 0, 1);
            neg = uniform(rng, 0, 2);
            break;
        case Subclass::LowerBound:
            pos = uniform(rng, 0, 2);
            neg = uniform(rng, 0, 1);
            break;
        case Subclass::General:
            pos = uniform(rng, 0, 2);
            neg = uniform(rng, 0, 2);
            break;
        }
        if (pos + neg >= 1 && pos + neg <= cap) {
            return {pos, neg};
        }
    }
}

} // namespace

Constraint4 random_constraint(Rng& rng, int n, Subclass shape, int lo, int hi) {
    const auto [pos, neg] = draw_counts(rng, n, shape);
    std::vector<VarId> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    Constraint4 c;
    // Positive occurrences fill i then q, negative ones j then p.
    if (pos >= 1) {
        c.i = vars[0];
    }
    if (pos == 2) {
        c.q = vars[1];
    }
    if (neg >= 1) {
        c.j = vars[static_cast<std::size_t>(pos)];
    }
    if (neg == 2) {
        c.p = vars[static_cast<std::size_t>(pos) + 1];
    }
    c.m = Bound(static_cast<long>(uniform(rng, lo, hi)));
    return c;
}

std::vector<Constraint4> random_system(Rng& rng, int n, std::size_t count, Subclass shape, int lo, int hi) {
    std::vector<Constraint4> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(random_constraint(rng, n, shape, lo, hi));
    }
    return out;
}

Valuation random_point(Rng& rng, int n, int lo, int hi) {
    Valuation v(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 1; i <= n; ++i) {
        v[static_cast<std::size_t>(i)] = uniform(rng, lo, hi);
    }
    return v;
}

std::vector<Constraint4> planted_system(Rng& rng, const Valuation& point, std::size_t count, Subclass shape,
                                        int max_slack) {
    const int n = static_cast<int>(point.size()) - 1;
    std::vector<Constraint4> out;
    for (std::size_t k = 0; k < count; ++k) {
        Constraint4 c = random_constraint(rng, n, shape);
        const Rational value = (point[c.i] - point[c.j]) - (point[c.p] - point[c.q]);
        c.m = Bound(Rational(value + uniform(rng, 0, max_slack)));
        out.push_back(c);
    }
    return out;
}

std::vector<Constraint4> box(int n, int lo, int hi) {
    std::vector<Constraint4> out;
    for (VarId i = 1; i <= n; ++i) {
        out.push_back(Constraint4{i, 0, 0, 0, Bound(static_cast<long>(hi))});
        out.push_back(Constraint4{0, i, 0, 0, Bound(static_cast<long>(-lo))});
    }
    return out;
}

std::vector<std::vector<Bound>> random_dbm(Rng& rng, int n, double density, int lo, int hi) {
    const auto size = static_cast<std::size_t>(n) + 1;
    std::bernoulli_distribution present(density);
    std::vector<std::vector<Bound>> d(size, std::vector<Bound>(size));
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t l = 0; l < size; ++l) {
            if (k == l) {
                d[k][l] = Bound(0L);
            } else if (present(rng)) {
                d[k][l] = Bound(static_cast<long>(uniform(rng, lo, hi)));
            }
        }
    }
    return d;
}

std::vector<Constraint4> dbm_constraints(const std::vector<std::vector<Bound>>& dbm) {
    std::vector<Constraint4> out;
    for (std::size_t k = 0; k < dbm.size(); ++k) {
        for (std::size_t l = 0; l < dbm.size(); ++l) {
            if (k != l && dbm[k][l].is_finite()) {
                out.push_back(Constraint4{static_cast<VarId>(l), static_cast<VarId>(k), 0, 0, dbm[k][l]});
            }
        }
    }
    return out;
}

} // namespace fourcsp::testing
