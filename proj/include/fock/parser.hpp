#pragma once

#include <string_view>

#include "fock/fields.hpp"

namespace fock {

// Parses the expression DSL into a field polynomial.
//
//   expr      := term (('+'|'-') term)*
//   term      := factor ('*' factor)*
//   factor    := atom ('^' nat)?
//   atom      := rational | generator | '(' expr ')'
//   generator := ['D' '[' nat (',' nat)* ']'] name '@' nat
//   rational  := int ['/' nat]
//
// Whitespace is insignificant. Derivative lists must have exactly dim
// entries (Error("DimensionMismatch") otherwise); malformed input raises
// SyntaxError carrying the byte offset.
FieldPoly parse_expression(std::string_view text, std::size_t dim);

} // namespace fock
