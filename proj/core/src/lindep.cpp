// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/lindep.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace fourcsp {

namespace {

// Echelon basis of the span of the members added so far. Each row remembers
// how it is combined from the members, so a dependent vector can be written
// as sum(mu_m * member_m).
class IncrementalBasis {
  public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    /// Adds a vector. Returns nullopt when it extends the basis; otherwise the
    /// coefficients mu over current members with v = sum(mu_m * member_m),
    /// leaving the basis unchanged.
    std::optional<std::vector<Rational>> add(const NormalVector& v) {
        std::vector<Rational> residual(dim_);
        for (std::size_t k = 0; k < v.size(); ++k) {
            residual[k] = v[k];
        }
        std::vector<Rational> mu(members_, Rational(0));
        for (const auto& row : rows_) {
            if (sgn(residual[row.pivot]) == 0) {
                continue;
            }
            const Rational alpha = residual[row.pivot] / row.vec[row.pivot];
            for (std::size_t k = 0; k < dim_; ++k) {
                residual[k] -= alpha * row.vec[k];
            }
            for (std::size_t m = 0; m < row.combo.size(); ++m) {
                mu[m] += alpha * row.combo[m];
            }
        }
        const auto pivot = std::find_if(residual.begin(), residual.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (pivot == residual.end()) {
            return mu;
        }
        const auto pivot_index = static_cast<std::size_t>(pivot - residual.begin());
        // residual = v - sum(mu_m * member_m)
        std::vector<Rational> combo(members_ + 1);
        for (std::size_t m = 0; m < members_; ++m) {
            combo[m] = -mu[m];
        }
        combo[members_] = 1;
        for (auto& row : rows_) {
            row.combo.resize(members_ + 1);
        }
        rows_.push_back(Row{std::move(residual), pivot_index, std::move(combo)});
        ++members_;
        return std::nullopt;
    }

    [[nodiscard]] std::size_t members() const noexcept { return members_; }

  private:
    struct Row {
        std::vector<Rational> vec;
        std::size_t pivot;
        std::vector<Rational> combo;
    };
    std::size_t dim_;
    std::size_t members_ = 0;
    std::vector<Row> rows_;
};

// Coprime positive integers proportional to the given positive rationals.
std::vector<Rational> to_coprime_integers(std::vector<Rational> coeffs) {
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs) {
        den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
    }
    mpz_class num_gcd = 0;
    for (auto& c : coeffs) {
        c *= den_lcm;
        num_gcd = gcd(num_gcd, mpz_class(c.get_num()));
    }
    for (auto& c : coeffs) {
        c /= num_gcd;
    }
    return coeffs;
}

// A simple positively dependent subfamily: indices into the input list and
// its coprime integer coefficients, both in ascending index order.
struct Circuit {
    std::vector<std::size_t> members;
    std::vector<Rational> coeffs;
};

// Enumerates simple positively dependent subfamilies of vectors with at most
// max_size elements. When forced is true, vectors[0] belongs to every
// reported family. Only linearly independent sets are extended: every proper
// subfamily of a simple family is linearly independent.
void for_each_circuit(std::span<const NormalVector> vectors, bool forced, std::size_t max_size,
                      const std::function<void(const Circuit&)>& visit) {
    std::size_t dim = 0;
    for (const auto& v : vectors) {
        dim = std::max(dim, v.size());
    }
    std::vector<std::size_t> chosen;
    IncrementalBasis seed(dim);
    std::size_t first = 0;
    if (forced) {
        seed.add(vectors[0]);
        chosen.push_back(0);
        first = 1;
    }

    std::function<void(std::size_t, const IncrementalBasis&)> dfs = [&](std::size_t start,
                                                                        const IncrementalBasis& basis) {
        for (std::size_t idx = start; idx < vectors.size(); ++idx) {
            if (vectors[idx].is_zero()) {
                continue;
            }
            IncrementalBasis next = basis;
            if (auto mu = next.add(vectors[idx])) {
                // vectors[idx] - sum(mu_m * chosen_m) = 0 is the only relation.
                if (std::all_of(mu->begin(), mu->end(), [](const Rational& x) { return sgn(x) < 0; })) {
                    std::vector<Rational> coeffs;
                    for (auto& x : *mu) {
                        coeffs.emplace_back(-x);
                    }
                    coeffs.emplace_back(1);
                    Circuit circuit{chosen, to_coprime_integers(std::move(coeffs))};
                    circuit.members.push_back(idx);
                    visit(circuit);
                }
                continue;
            }
            if (chosen.size() + 1 < max_size) {
                chosen.push_back(idx);
                dfs(idx + 1, next);
                chosen.pop_back();
            }
        }
    };
    if (max_size >= 2) {
        dfs(first, seed);
    }
}

void check_family(std::span<const NormalVector> vectors, const LindepLimits& limits) {
    if (vectors.size() > limits.max_family) {
        throw LindepLimitError("family of " + std::to_string(vectors.size()) + " vectors exceeds the limit of " +
                               std::to_string(limits.max_family));
    }
    std::set<NormalVector> seen;
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) {
            throw std::invalid_argument("family vectors differ in length");
        }
        if (v.is_zero()) {
            throw std::invalid_argument("family contains a zero vector");
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument("family contains duplicate vectors");
        }
    }
}

std::vector<Circuit> all_circuits(std::span<const NormalVector> vectors) {
    std::vector<Circuit> out;
    for_each_circuit(vectors, false, vectors.size(), [&](const Circuit& c) { out.push_back(c); });
    return out;
}

void check_constraint_count(std::size_t count, const LindepLimits& limits) {
    if (count > limits.max_constraints) {
        throw LindepLimitError("constraint list of " + std::to_string(count) + " exceeds the limit of " +
                               std::to_string(limits.max_constraints));
    }
}

} // namespace

std::optional<std::vector<Rational>> positive_dependence(std::span<const NormalVector> vectors,
                                                         const LindepLimits& limits) {
    check_family(vectors, limits);
    if (vectors.empty()) {
        return std::nullopt;
    }
    // The nonnegative kernel is generated by the simple subfamilies; a
    // strictly positive element exists iff they cover the whole family.
    std::vector<Rational> sum(vectors.size(), Rational(0));
    for (const auto& circuit : all_circuits(vectors)) {
        for (std::size_t k = 0; k < circuit.members.size(); ++k) {
            sum[circuit.members[k]] += circuit.coeffs[k];
        }
    }
    if (std::any_of(sum.begin(), sum.end(), [](const Rational& x) { return sgn(x) == 0; })) {
        return std::nullopt;
    }
    return to_coprime_integers(std::move(sum));
}

bool is_simple(std::span<const NormalVector> vectors, const LindepLimits& limits) {
    check_family(vectors, limits);
    const auto circuits = all_circuits(vectors);
    return circuits.size() == 1 && circuits.front().members.size() == vectors.size();
}

std::vector<Rational> unique_coeffs(std::span<const NormalVector> vectors, const LindepLimits& limits) {
    check_family(vectors, limits);
    auto circuits = all_circuits(vectors);
    if (circuits.size() != 1 || circuits.front().members.size() != vectors.size()) {
        throw NotSimpleError("family is not simple positively dependent");
    }
    return std::move(circuits.front().coeffs);
}

std::vector<WeightedFamily> enumerate_simple_hcycles(std::span<const Constraint4> constraints, std::size_t max_size,
                                                     const LindepLimits& limits) {
    check_constraint_count(constraints.size(), limits);
    const int n = max_var_index(constraints);
    std::vector<NormalVector> vectors;
    for (const auto& c : constraints) {
        vectors.push_back(c.m.is_finite() ? normal_vector(c, n) : NormalVector::zero(static_cast<std::size_t>(n) + 1));
    }
    std::vector<WeightedFamily> out;
    for_each_circuit(vectors, false, max_size, [&](const Circuit& circuit) {
        WeightedFamily f;
        for (const std::size_t idx : circuit.members) {
            f.members.push_back(constraints[idx]);
        }
        f.coeffs = circuit.coeffs;
        out.push_back(std::move(f));
    });
    return out;
}

Bound cycle_weight(const WeightedFamily& f) {
    Rational total;
    for (std::size_t k = 0; k < f.members.size(); ++k) {
        if (f.members[k].m.is_infinite()) {
            return Bound::infinity();
        }
        total += f.coeffs[k] * f.members[k].m.value();
    }
    return Bound(total);
}

Bound cycle_weight(const WeightedFamily& f, std::span<const Bound> bounds) {
    if (bounds.size() != f.members.size()) {
        throw std::invalid_argument("one bound per member expected");
    }
    Rational total;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        if (bounds[k].is_infinite()) {
            return Bound::infinity();
        }
        total += f.coeffs[k] * bounds[k].value();
    }
    return Bound(total);
}

MinWeight min_weight_path(const Constraint4& target, std::span<const Constraint4> constraints, std::size_t max_size,
                          const LindepLimits& limits) {
    check_constraint_count(constraints.size(), limits);
    const int n = std::max({max_var_index(constraints), target.i, target.j, target.p, target.q});
    const NormalVector goal = normal_vector(target, n);
    if (goal.is_zero()) {
        throw std::invalid_argument("hyperpaths are undefined for a target with a zero normal vector");
    }
    // vectors[0] is the complement of the target; vectors[k + 1] is constraints[k].
    std::vector<NormalVector> vectors{-goal};
    for (const auto& c : constraints) {
        vectors.push_back(c.m.is_finite() ? normal_vector(c, n) : NormalVector::zero(static_cast<std::size_t>(n) + 1));
    }
    MinWeight best;
    for_each_circuit(vectors, true, max_size + 1, [&](const Circuit& circuit) {
        // members[0] == 0 is the complement; rescale its coefficient to 1.
        const Rational& unit = circuit.coeffs.front();
        WeightedFamily path;
        Rational weight;
        for (std::size_t k = 1; k < circuit.members.size(); ++k) {
            const Constraint4& c = constraints[circuit.members[k] - 1];
            Rational lambda = circuit.coeffs[k] / unit;
            weight += lambda * c.m.value();
            path.members.push_back(c);
            path.coeffs.push_back(std::move(lambda));
        }
        if (best.weight.tighten(Bound(weight))) {
            best.path = HyperPath{std::move(path), target};
        }
    });
    return best;
}

Bound min_weight_bruteforce(const Constraint4& target, std::span<const Constraint4> constraints, std::size_t max_size,
                            const LindepLimits& limits) {
    return min_weight_path(target, constraints, max_size, limits).weight;
}

} // namespace fourcsp
