#pragma once

#include <string_view>

#include "cca/polynomial.hpp"

namespace cca {

// Largest accepted exponent literal.
inline constexpr long kMaxExponent = 2147483647;

// Parses the textual polynomial format:
//
//   poly   := [sign] term (sign term)*
//   term   := coefficient ('*' factor)* | factor ('*' factor)*
//   factor := variable ('^' natural)?
//   coefficient := natural ('/' natural)?
//
// Whitespace may appear between tokens. Coefficients are arbitrary
// precision; over F_p they are reduced, and denominators must be
// invertible. Throws ParseError with the byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace cca
