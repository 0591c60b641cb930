#pragma once

#include <gmpxx.h>

#include <string>

namespace cca {

using Int = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms. The mpq_class(num, den) constructor skips
// canonicalization, which breaks comparisons; route fractions through here.
inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Binomial coefficient C(n, k). Negative n follows the polynomial
// convention C(n, k) = n(n-1)...(n-k+1)/k!.
Int binomial(const Int& n, unsigned long k);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q"
// with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

// Accepts "p" or "p/q" with an optional leading sign. Throws ParseError.
Rational rational_from_string(const std::string& text);

}  // namespace cca
