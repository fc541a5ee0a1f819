#pragma once

#include <string_view>

#include "cuspidal/mixed_polynomial.hpp"

namespace cuspidal {

// Recursive-descent parser for polynomial expressions:
//
//   expr  := sign? term (('+' | '-') term)*
//   term  := coeff? ('*'? factor)*          (at least one of the two)
//   factor:= atom ('^' uint)?
//   atom  := 'z' | 'zbar' | 'i' | '(' expr ')' | '(' real ',' real ')'
//   coeff := decimal with optional fraction and exponent
//
// Whitespace is ignored between tokens. The '(' re ',' im ')' literal makes
// to_string output parse back to the identical polynomial. Errors throw
// ParseError carrying the byte offset and the set of expected tokens.
MixedPolynomial parse_poly(std::string_view src);

}  // namespace cuspidal
