#ifndef FCART_PARSE_HPP
#define FCART_PARSE_HPP

#include <string>

#include "fcart/polynomial.hpp"

namespace fcart {

// Grammar (whitespace insignificant, no parentheses):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)*
//   factor := var ('^' uint)?
//   coeff  := uint
// Errors: SyntaxError (with byte offset), UnknownVariable, NegativeExponent.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace fcart

#endif
