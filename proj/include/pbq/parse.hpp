#pragma once

#include <string>

#include "pbq/algebra.hpp"

namespace pbq {

// Parses an expression in the generators and scalars into a normal-ordered
// element. Grammar (whitespace-insensitive, juxtaposition binds tighter than
// '+'/'-'):
//
//   expr    :=  ['-'] term (('+' | '-') term)*
//   term    :=  factor (['*'] factor)*
//   factor  :=  primary ['^' ['-'] integer]
//   primary :=  integer ['/' integer]      rational scalar
//             | 'q'                        the bound deformation parameter
//             | 'zeta' '(' integer ')'     root of unity e^{2 pi i / N}
//             | 'a+' | 'a-' | 'K'          generators
//             | '(' expr ')'
//
// 'a+' and 'a-' are single tokens. Negative powers are accepted only for
// invertible elements (scalars and K^s monomials), so 'K^-1' works and
// '(a+)^-1' is rejected. Errors carry the offending position.
AlgebraElement parse_expression(const std::string& text, const QContext& ctx);

}  // namespace pbq
