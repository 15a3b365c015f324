#pragma once

// Text format for families:
//
//   # comment
//   vars: x1, x2
//   params: a
//   let gamma = x1^2 + x2^2 - 1
//   f1 = (x1 - a) * (x1 - 1) * gamma
//   f2 = (x2 - 3) * (x2 - 4)^2 * gamma
//
// Whitespace (including newlines) is insignificant. Coefficients are
// rationals written `p` or `p/q`. `let` is a reserved word.

#include "paramgb/ideal.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace paramgb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column, bool at_end);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  bool at_end() const { return at_end_; }

 private:
  std::size_t line_, column_;
  bool at_end_;
};

/// Throws ParseError for syntax errors and undeclared identifiers, and
/// std::invalid_argument for a nonsquare system.
FamilySpec parse_family(std::string_view text);

/// Inverse of parse_family for canonical families.
std::string format_family(const FamilySpec& family);

/// `p1=v1,p2=v2,...`; every parameter of ctx must be assigned exactly once.
/// Throws std::invalid_argument.
ParameterPoint parse_parameter_point(std::string_view text, const VariableContext& ctx);

}  // namespace paramgb
