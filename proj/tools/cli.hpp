// Copyright (c) fourcsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fourcsp::cli {

enum class Command { Check, Close, Solve, Bounds, Subclass, Explain };
enum class Format { Text, Json };

/// Exit codes. Stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitOracleDisagreement = 3;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    Command command = Command::Check;
    std::string input;
    Format format = Format::Text;
    bool oracle = false;
    std::optional<long> max_sweeps;
    bool witness_anyway = false;
    std::size_t max_cycle_size = 6;
};

std::optional<Command> parse_command(std::string_view name);

/// Runs one command on the file named in config, reporting on out and
/// diagnostics on err. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Same with the constraint text supplied directly.
int run_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err);

} // namespace fourcsp::cli
