#pragma once

#include <string>

#include "dring/ratfun.hpp"

namespace dring {

// Parses an arithmetic expression over the given ring.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' natural)?
//   base   := name | natural | '(' expr ')'
//
// Names resolve to ring variables, or to the coefficient field generator
// when the field is an extension of the rationals. Whitespace is skipped.
// Malformed input raises ParseError with the offending position.
RationalFunction parse_expression(const RingPtr& ring, const std::string& src);

// Same, but requires the result to be a polynomial (denominator 1).
MultiPoly parse_polynomial(const RingPtr& ring, const std::string& src);

}  // namespace dring
