#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "multmon/parse.hpp"
#include "multmon/random.hpp"

namespace multmon {

// Result documents. Field names are listed in docs/result-schema.md.

enum class Command {
  Multiplicity,
  Codim,
  Classify,
  Betti,
  Taylor,
  Diagram,
  Verify,
  Regularity,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command command);

struct RunOptions {
  /// For `multiplicity`: also run the power-sum engine and the oracle and
  /// require agreement.
  bool check = false;
};

struct RunResult {
  nlohmann::json document;
  int exit_code = 0;
};

/// Runs one command on an already parsed ideal. Library errors become an
/// "error" document with the matching exit code.
RunResult run(Command command, const ParsedIdeal& input, const RunOptions& options);

/// Parses `text` (reporting positions on `line`) and runs the command.
RunResult run_text(Command command, std::string_view text, const VariableTablePtr& vars,
                   const RunOptions& options, std::size_t line = 1);

/// `verify --random`: cross-checks every applicable method on `cases`
/// seeded random ideals.
RunResult run_random_verify(std::uint64_t seed, std::size_t cases,
                            const RandomIdealShape& shape = {});

/// Indented human-readable rendering of a result document.
std::string render_pretty(const nlohmann::json& document);

}  // namespace multmon
