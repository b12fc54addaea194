// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourcsp/solver.hpp"

#include <string>

namespace fourcsp {

std::vector<Interval> reduce_domains(const Matrix2D& closed) {
    const int n = closed.num_vars();
    std::vector<Interval> out(static_cast<std::size_t>(n) + 1);
    out[0] = Interval{Rational(0), Rational(0)};
    for (VarId i = 1; i <= n; ++i) {
        const Bound& lo = closed.get(0, i, 0, 0);
        const Bound& hi = closed.get(i, 0, 0, 0);
        if (lo.is_finite()) {
            out[i].lower = -lo.value();
        }
        if (hi.is_finite()) {
            out[i].upper = hi.value();
        }
    }
    return out;
}

bool is_bounded(const Matrix2D& closed) {
    const auto domains = reduce_domains(closed);
    for (const auto& d : domains) {
        if (!d.is_bounded()) {
            return false;
        }
    }
    return true;
}

namespace {

void pin(Matrix2D& m, VarId i, const Rational& value) {
    m.set_min(i, 0, 0, 0, Bound(value));
    m.set_min(0, i, 0, 0, Bound(Rational(-value)));
    m.normalize();
}

NormalVector unit(VarId i, int n, int sign) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1, 0);
    v[static_cast<std::size_t>(i)] = sign;
    return NormalVector(std::move(v));
}

class WitnessBuilder {
  public:
    WitnessBuilder(const Matrix2D& closed, std::span<const Constraint4> original, Exactness exactness,
                   const SolveOptions& options, bool verify_all)
        : current_(closed), original_(original), exactness_(exactness), options_(options), verify_all_(verify_all),
          pinned_(LinearSystem::from_constraints(original, closed.num_vars())) {}

    Valuation run() {
        const int n = current_.num_vars();
        Valuation nu(static_cast<std::size_t>(n) + 1, Rational(0));
        for (VarId i = 1; i <= n; ++i) {
            nu[i] = next_value(i);
            Matrix2D trial = current_;
            pin(trial, i, nu[i]);
            ClosureResult r = close(std::move(trial), exactness_, options_.closure);
            bool ok = r.feasible;
            if (ok && (verify_all_ || exactness_ == Exactness::UpperApprox)) {
                LinearSystem sys = pinned_;
                sys.fix_variable(i, nu[i]);
                ok = fm_feasible(sys, options_.fm);
            }
            if (!ok) {
                // The closure's bound is not attained; use the exact supremum,
                // or the exact infimum when the variable is unbounded above.
                nu[i] = oracle_value(i);
                trial = current_;
                pin(trial, i, nu[i]);
                r = close(std::move(trial), exactness_, options_.closure);
                if (!r.feasible) {
                    throw std::logic_error("closure rejects a pin certified by the oracle for x" + std::to_string(i));
                }
            }
            pinned_.fix_variable(i, nu[i]);
            current_ = std::move(r.matrix);
        }
        return nu;
    }

  private:
    Rational next_value(VarId i) const {
        const Bound& hi = current_.get(i, 0, 0, 0);
        if (hi.is_finite()) {
            return hi.value();
        }
        const Bound& neg_lo = current_.get(0, i, 0, 0);
        if (neg_lo.is_finite()) {
            const Rational lo = -neg_lo.value();
            return lo > 0 ? lo : Rational(0);
        }
        return Rational(0);
    }

    Rational oracle_value(VarId i) const {
        const int n = current_.num_vars();
        const Bound sup = fm_tight_bound(pinned_, unit(i, n, 1), options_.fm);
        if (sup.is_finite()) {
            return sup.value();
        }
        const Bound neg_inf = fm_tight_bound(pinned_, unit(i, n, -1), options_.fm);
        if (neg_inf.is_finite()) {
            const Rational lo = -neg_inf.value();
            return lo > 0 ? lo : Rational(0);
        }
        return Rational(0);
    }

    Matrix2D current_;
    std::span<const Constraint4> original_;
    Exactness exactness_;
    const SolveOptions& options_;
    bool verify_all_;
    LinearSystem pinned_;
};

bool satisfies_all(std::span<const Constraint4> constraints, const Valuation& nu) {
    for (const auto& c : constraints) {
        if (!satisfies(c, nu)) {
            return false;
        }
    }
    return true;
}

} // namespace

Valuation extract_witness(const Matrix2D& closed, std::span<const Constraint4> original, Exactness exactness,
                          const SolveOptions& options) {
    if (closed.zero_cell().is_finite() && closed.zero_cell().value() < 0) {
        throw WitnessError("cannot extract a witness from an infeasible matrix");
    }
    if (!options.witness_anyway && !is_bounded(closed)) {
        throw WitnessError("cannot extract a witness from an unbounded system without witness_anyway");
    }
    if (!fm_feasible(LinearSystem::from_constraints(original, closed.num_vars()), options.fm)) {
        throw WitnessError("the original constraints are infeasible");
    }
    Valuation nu = WitnessBuilder(closed, original, exactness, options, false).run();
    if (satisfies_all(original, nu)) {
        return nu;
    }
    nu = WitnessBuilder(closed, original, exactness, options, true).run();
    if (satisfies_all(original, nu)) {
        return nu;
    }
    throw std::logic_error("witness extraction produced a valuation violating the constraints");
}

SolveReport solve(std::span<const Constraint4> constraints, int n, const SolveOptions& options) {
    const Exactness exactness = exactness_of(classify(constraints));
    SolveReport report{false, close(load(constraints, n), exactness, options.closure), {}, std::nullopt};
    report.feasible = report.closed.feasible;
    if (!report.feasible) {
        return report;
    }
    report.domains = reduce_domains(report.closed.matrix);
    if (options.witness_anyway || is_bounded(report.closed.matrix)) {
        report.witness = extract_witness(report.closed.matrix, constraints, exactness, options);
    }
    return report;
}

} // namespace fourcsp
