#ifndef HMS_MONOMIAL_TEXT_HPP
#define HMS_MONOMIAL_TEXT_HPP

#include <string>

#include "hms/pants.hpp"

namespace hms {

// Grammar: "1" | term ("*" term)*, term = "z"INDEX("^"EXP)?, EXP a
// nonnegative integer or "p/2" with odd p; indices in 0..n+1.  Repeated
// variables accumulate.  Throws input_error with the offending position.
HalfMonomial parse_monomial(const std::string& text, int n);

// Inverse of parse_monomial on canonical output: factors in slot order,
// exponent 1 left implicit, half-integer exponents printed as "p/2".
std::string print_monomial(const HalfMonomial& m);

}  // namespace hms

#endif
