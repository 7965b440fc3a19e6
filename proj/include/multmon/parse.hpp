#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multmon/error.hpp"
#include "multmon/ideal.hpp"

namespace multmon {

enum class ParseErrorCode {
  Syntax,
  ZeroExponent,
  ExponentTooLarge,
  EmptyIdeal,
  UnitGenerator,
  UnknownVariable,
};

std::string_view to_string(ParseErrorCode code);

class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, std::size_t line, std::size_t column,
             const std::string& message);

  ParseErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ParseErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

struct ParsedIdeal {
  MonomialIdeal ideal;
  /// Human-readable notes about dropped duplicate or redundant generators.
  std::vector<std::string> notices;
};

/// Parses "a^2*b*c, b^3*c; c^4" style text.
///
///   ideal    := monomial ((',' | ';') monomial)*
///   monomial := factor (('*' | whitespace) factor)*
///   factor   := var ('^' uint)?
///   var      := [a-zA-Z][a-zA-Z0-9_]*
///
/// '#' starts a comment running to the end of the line. Without an explicit
/// table, variables are numbered in order of first occurrence. The literal
/// "1" is recognized only to report a unit generator. `line` is used in
/// error positions.
ParsedIdeal parse_ideal(std::string_view text, VariableTablePtr vars = nullptr,
                        std::size_t line = 1);

/// One generator in structured form: (variable name, exponent) pairs.
/// Repeated names add up.
using ExponentMap = std::vector<std::pair<std::string, std::uint64_t>>;

/// Structured counterpart of parse_ideal. Error columns are 1-based
/// generator positions.
ParsedIdeal ideal_from_exponent_maps(std::span<const ExponentMap> generators,
                                     VariableTablePtr vars = nullptr, std::size_t line = 1);

/// Comma separated variable list such as "a,b,c".
VariableTablePtr parse_variable_list(std::string_view text);

/// Inverse of parse_ideal for an ideal over the same table.
std::string print_ideal(const MonomialIdeal& ideal);

}  // namespace multmon
