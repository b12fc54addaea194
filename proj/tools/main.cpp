// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace fourcsp::cli;
    CLI::App app{"Solver for conjunctions of (xi - xj) - (xp - xq) <= m constraints"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    long max_sweeps = 0;
    std::size_t max_cycle_size = config.max_cycle_size;

    const std::map<std::string, std::string> descriptions{
        {"check", "Print feasible or infeasible (exit 0 or 1)"},
        {"close", "Emit the closed 2D-DBM"},
        {"solve", "Closure, variable domains and a witness valuation"},
        {"bounds", "Emit the variable intervals"},
        {"subclass", "Print the syntactic subclass and closure exactness"},
        {"explain", "Show a negative simple h-cycle behind an infeasible verdict"},
    };
    for (const auto& [name, description] : descriptions) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("input", config.input, "Constraint file")->required()->check(CLI::ExistingFile);
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--oracle", config.oracle, "Cross-check the verdict with Fourier-Motzkin (exit 3 on disagreement)");
        sub->add_option("--max-sweeps", max_sweeps, "Lower the closure sweep cap")->check(CLI::PositiveNumber);
        sub->add_flag("--witness-anyway", config.witness_anyway, "Extract a witness even for unbounded systems");
        sub->add_option("--max-cycle-size", max_cycle_size, "Largest h-cycle considered by explain")
            ->check(CLI::Range(2, 16));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    config.command = *parse_command(app.get_subcommands().front()->get_name());
    config.format = format == "json" ? Format::Json : Format::Text;
    if (max_sweeps > 0) {
        config.max_sweeps = max_sweeps;
    }
    config.max_cycle_size = max_cycle_size;
    return run(config, std::cout, std::cerr);
}
