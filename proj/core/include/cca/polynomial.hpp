#pragma once

#include <string>
#include <vector>

#include "cca/ring.hpp"

namespace cca {

struct Term {
  FieldElement coeff;
  Exponent mono;
};

// Multivariate polynomial in canonical form: terms sorted descending in the
// ring's monomial order, no zero coefficients, no repeated monomials.
struct Polynomial {
  RingPtr ring;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& leading_term() const;
  // Total degree of the leading monomial, -1 for the zero polynomial.
  int degree() const;
};

Polynomial poly_zero(RingPtr ring);
Polynomial poly_constant(RingPtr ring, const FieldElement& c);
Polynomial poly_monomial(RingPtr ring, FieldElement c, Exponent e);
// Normalizes an arbitrary term list (sorts, merges, drops zeros).
Polynomial make_polynomial(RingPtr ring, std::vector<Term> terms);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial neg(const Polynomial& f);
Polynomial mul(const Polynomial& f, const Polynomial& g);
// c * x^e * f, the workhorse of division steps.
Polynomial mul_term(const Polynomial& f, const FieldElement& c,
                    const Exponent& e);
Polynomial scale(const Polynomial& f, const FieldElement& c);

bool poly_equal(const Polynomial& f, const Polynomial& g);

// Deterministic total order used to sort generator lists: degree, then
// termwise monomial comparison, then coefficient text.
int compare_polynomials(const Polynomial& f, const Polynomial& g);

// Scales f monic. Throws DomainError on zero input.
Polynomial make_monic(const Polynomial& f);

// Canonical text form, e.g. "x^2*y - 2*x + 1/3".
std::string to_string(const Polynomial& f);

// Throws DomainError unless f and g live in structurally equal rings.
void require_same_ring(const Polynomial& f, const Polynomial& g);

}  // namespace cca
