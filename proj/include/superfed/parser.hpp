#pragma once

#include <string_view>

#include "superfed/chart.hpp"

namespace superfed {

/// Parses an expression over the chart's coordinates.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Odd coordinates anticommute. Division requires a divisor with nonzero
/// body. Errors are reported as parse_error with a character offset.
Superfunction parse_expression(std::string_view text, const Chart& chart);

}  // namespace superfed
