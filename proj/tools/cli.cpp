// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "fourcsp/closure.hpp"
#include "fourcsp/constraint.hpp"
#include "fourcsp/fm_oracle.hpp"
#include "fourcsp/lindep.hpp"
#include "fourcsp/matrix2d.hpp"
#include "fourcsp/solver.hpp"

namespace fourcsp::cli {

namespace {

using nlohmann::json;

class OracleDisagreement : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string_view command_name(Command c) {
    switch (c) {
    case Command::Check:
        return "check";
    case Command::Close:
        return "close";
    case Command::Solve:
        return "solve";
    case Command::Bounds:
        return "bounds";
    case Command::Subclass:
        return "subclass";
    case Command::Explain:
        return "explain";
    }
    return "?";
}

json header(Command c) { return json{{"schema_version", kSchemaVersion}, {"command", command_name(c)}}; }

json optional_rational(const std::optional<Rational>& v) { return v ? json(to_string(*v)) : json(nullptr); }

json domains_json(const std::vector<Interval>& domains) {
    json out = json::array();
    for (std::size_t i = 1; i < domains.size(); ++i) {
        out.push_back(
            {{"var", i}, {"lower", optional_rational(domains[i].lower)}, {"upper", optional_rational(domains[i].upper)}});
    }
    return out;
}

void print_domains(std::ostream& out, const std::vector<Interval>& domains) {
    for (std::size_t i = 1; i < domains.size(); ++i) {
        const auto& d = domains[i];
        out << "x" << i << " in [" << (d.lower ? to_string(*d.lower) : "-inf") << ", "
            << (d.upper ? to_string(*d.upper) : "inf") << "]\n";
    }
}

// One line per non-default vector class, using the first cell of the class
// in row-major order as its representative.
void print_matrix(std::ostream& out, const Matrix2D& m) {
    const int n = m.num_vars();
    const auto side = static_cast<std::size_t>(n + 1);
    std::vector<bool> seen(m.classes().num_classes(), false);
    for (std::size_t idx = 0; idx < m.num_cells(); ++idx) {
        const std::size_t cls = m.classes().class_of(idx);
        if (seen[cls] || m.cell(idx) == m.default_value(idx)) {
            continue;
        }
        seen[cls] = true;
        const std::size_t row = idx / m.side();
        const std::size_t col = idx % m.side();
        const Constraint4 c{static_cast<VarId>(col / side), static_cast<VarId>(col % side),
                            static_cast<VarId>(row / side), static_cast<VarId>(row % side), m.cell(idx)};
        out << to_string(c) << "\n";
    }
}

// Feasibility per Fourier-Motzkin; throws OracleDisagreement on mismatch.
void cross_check(const ConstraintSystem& sys, bool closure_feasible) {
    const bool oracle = fm_feasible(LinearSystem::from_constraints(sys.constraints, sys.n));
    if (oracle != closure_feasible) {
        throw OracleDisagreement(std::string("oracle disagreement: closure says ") +
                                 (closure_feasible ? "feasible" : "infeasible") + ", Fourier-Motzkin says " +
                                 (oracle ? "feasible" : "infeasible"));
    }
}

struct Context {
    const RunConfig& config;
    const ConstraintSystem& sys;
    std::ostream& out;
    std::ostream& err;

    [[nodiscard]] bool json_out() const { return config.format == Format::Json; }
    [[nodiscard]] ClosureOptions closure_options() const { return ClosureOptions{config.max_sweeps}; }
    [[nodiscard]] SolveOptions solve_options() const {
        SolveOptions o;
        o.closure = closure_options();
        o.witness_anyway = config.witness_anyway;
        return o;
    }
    [[nodiscard]] ClosureResult closed() const {
        const Exactness e = exactness_of(classify(sys.constraints));
        return close(load(sys.constraints, sys.n), e, closure_options());
    }
};

int verdict_code(bool feasible) { return feasible ? kExitOk : kExitInfeasible; }

int do_check(const Context& ctx) {
    const ClosureResult r = ctx.closed();
    if (ctx.config.oracle) {
        cross_check(ctx.sys, r.feasible);
    }
    if (ctx.json_out()) {
        json j = header(Command::Check);
        j["feasible"] = r.feasible;
        j["sweeps_used"] = r.sweeps_used;
        j["exactness"] = to_string(r.exactness);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << (r.feasible ? "feasible" : "infeasible") << "\n";
    }
    return verdict_code(r.feasible);
}

int do_close(const Context& ctx) {
    const ClosureResult r = ctx.closed();
    if (ctx.config.oracle) {
        cross_check(ctx.sys, r.feasible);
    }
    if (ctx.json_out()) {
        json j = to_json(r.matrix);
        j["schema_version"] = kSchemaVersion;
        j["command"] = "close";
        j["feasible"] = r.feasible;
        j["sweeps_used"] = r.sweeps_used;
        j["stationary"] = r.stationary;
        j["exactness"] = to_string(r.exactness);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << (r.feasible ? "feasible" : "infeasible") << "\n"
                << "sweeps: " << r.sweeps_used << "\n"
                << "exactness: " << to_string(r.exactness) << "\n";
        print_matrix(ctx.out, r.matrix);
    }
    return verdict_code(r.feasible);
}

SolveReport checked_solve(const Context& ctx) {
    SolveReport report = [&] {
        try {
            return solve(ctx.sys.constraints, ctx.sys.n, ctx.solve_options());
        } catch (const WitnessError& e) {
            // Only reachable when the closure accepted a system the oracle rejects.
            throw OracleDisagreement(std::string("oracle disagreement: closure says feasible, ") + e.what());
        }
    }();
    if (ctx.config.oracle) {
        cross_check(ctx.sys, report.feasible);
    }
    return report;
}

int do_solve(const Context& ctx) {
    const SolveReport report = checked_solve(ctx);
    if (ctx.json_out()) {
        json j = header(Command::Solve);
        j["feasible"] = report.feasible;
        j["sweeps_used"] = report.closed.sweeps_used;
        j["stationary"] = report.closed.stationary;
        j["exactness"] = to_string(report.closed.exactness);
        j["domains"] = domains_json(report.domains);
        if (report.witness) {
            json w = json::array();
            for (const auto& v : *report.witness) {
                w.push_back(to_string(v));
            }
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["matrix"] = to_json(report.closed.matrix);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << (report.feasible ? "feasible" : "infeasible") << "\n";
        if (report.feasible) {
            ctx.out << "exactness: " << to_string(report.closed.exactness) << "\n";
            print_domains(ctx.out, report.domains);
            if (report.witness) {
                ctx.out << "witness:";
                for (std::size_t i = 1; i < report.witness->size(); ++i) {
                    ctx.out << " x" << i << "=" << to_string((*report.witness)[i]);
                }
                ctx.out << "\n";
            } else {
                ctx.out << "witness: none (unbounded; use --witness-anyway)\n";
            }
        }
    }
    return verdict_code(report.feasible);
}

int do_bounds(const Context& ctx) {
    const ClosureResult r = ctx.closed();
    if (ctx.config.oracle) {
        cross_check(ctx.sys, r.feasible);
    }
    const std::vector<Interval> domains = r.feasible ? reduce_domains(r.matrix) : std::vector<Interval>{};
    if (ctx.json_out()) {
        json j = header(Command::Bounds);
        j["feasible"] = r.feasible;
        j["exactness"] = to_string(r.exactness);
        j["domains"] = domains_json(domains);
        ctx.out << j.dump() << "\n";
    } else if (r.feasible) {
        print_domains(ctx.out, domains);
    } else {
        ctx.out << "infeasible\n";
    }
    return verdict_code(r.feasible);
}

int do_subclass(const Context& ctx) {
    const Subclass sub = classify(ctx.sys.constraints);
    const Exactness e = exactness_of(sub);
    if (ctx.json_out()) {
        json j = header(Command::Subclass);
        j["subclass"] = to_string(sub);
        j["exactness"] = to_string(e);
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << to_string(sub) << " / " << to_string(e) << "\n";
    }
    return kExitOk;
}

int do_explain(const Context& ctx) {
    const auto cycles = enumerate_simple_hcycles(ctx.sys.constraints, ctx.config.max_cycle_size);
    const WeightedFamily* best = nullptr;
    Bound best_weight;
    for (const auto& f : cycles) {
        const Bound w = cycle_weight(f);
        if (w.is_infinite() || w.value() >= 0) {
            continue;
        }
        if (best == nullptr || f.members.size() < best->members.size() ||
            (f.members.size() == best->members.size() && w < best_weight)) {
            best = &f;
            best_weight = w;
        }
    }
    if (best == nullptr) {
        const bool feasible = ctx.closed().feasible;
        if (ctx.json_out()) {
            json j = header(Command::Explain);
            j["feasible"] = feasible;
            j["cycle"] = nullptr;
            ctx.out << j.dump() << "\n";
        } else if (feasible) {
            ctx.out << "feasible: nothing to explain\n";
        } else {
            ctx.out << "infeasible, but no negative simple h-cycle has at most " << ctx.config.max_cycle_size
                    << " constraints\n";
        }
        return feasible ? kExitInfeasible : kExitError;
    }
    if (ctx.json_out()) {
        json members = json::array();
        for (std::size_t k = 0; k < best->members.size(); ++k) {
            members.push_back({{"constraint", to_string(best->members[k])}, {"coeff", to_string(best->coeffs[k])}});
        }
        json j = header(Command::Explain);
        j["feasible"] = false;
        j["cycle"] = {{"members", members}, {"weight", best_weight.str()}};
        ctx.out << j.dump() << "\n";
    } else {
        ctx.out << "infeasible: negative simple h-cycle of weight " << best_weight << "\n";
        for (std::size_t k = 0; k < best->members.size(); ++k) {
            ctx.out << "  " << to_string(best->coeffs[k]) << " * (" << to_string(best->members[k]) << ")\n";
        }
    }
    return kExitOk;
}

} // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const Command c : {Command::Check, Command::Close, Command::Solve, Command::Bounds, Command::Subclass,
                            Command::Explain}) {
        if (command_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

int run_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
    try {
        if (config.max_sweeps && *config.max_sweeps <= 0) {
            throw std::invalid_argument("--max-sweeps must be positive");
        }
        if (config.max_cycle_size < 2) {
            throw std::invalid_argument("--max-cycle-size must be at least 2");
        }
        const ConstraintSystem sys = parse_system(text);
        const Context ctx{config, sys, out, err};
        switch (config.command) {
        case Command::Check:
            return do_check(ctx);
        case Command::Close:
            return do_close(ctx);
        case Command::Solve:
            return do_solve(ctx);
        case Command::Bounds:
            return do_bounds(ctx);
        case Command::Subclass:
            return do_subclass(ctx);
        case Command::Explain:
            return do_explain(ctx);
        }
        throw std::invalid_argument("unknown command");
    } catch (const OracleDisagreement& e) {
        err << "error: " << e.what() << "\n";
        return kExitOracleDisagreement;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ifstream in(config.input);
    if (!in) {
        err << "error: cannot read " << config.input << "\n";
        return kExitError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return run_text(config, text.str(), out, err);
}

} // namespace fourcsp::cli
