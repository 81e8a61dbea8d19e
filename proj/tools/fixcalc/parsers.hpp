#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fixpoint/analyses/first_sets.hpp"
#include "fixpoint/analyses/strictness.hpp"

namespace fixcalc {

/// Syntax error at a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Lines of the form `lhs : sym sym ...`, terminals double-quoted, `#`
/// comments, an optional trailing `;`. No symbols means epsilon.
fixpoint::analyses::Grammar parse_grammar(std::string_view text);

/// Definitions `fun name(p1, ..., pn) = expr`. `if`/`then`/`else` binds
/// loosest, `+` is left-associative.
fixpoint::analyses::Program parse_program(std::string_view text);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace fixcalc
