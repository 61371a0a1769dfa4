#pragma once

#include <string_view>

#include "polarmaps/poly.hpp"

namespace polarmaps {

/// Parse polynomial text over variables x0..x{num_vars-1}.
///
/// Grammar (whitespace insignificant):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INT)?
///   primary := INT ('/' INT)? | 'x' INT | '(' expr ')'
///
/// Multiplication must be written explicitly. Errors are ParseError with the
/// byte offset of the offending token.
Poly parse_poly(std::string_view text, std::size_t num_vars);

/// One more than the largest variable index mentioned in `text` (at least 1).
std::size_t infer_num_vars(std::string_view text);

/// Comma-separated rationals, e.g. "3,6,1" or "1/2,0,1".
ProjPoint parse_point(std::string_view text);

}  // namespace polarmaps
