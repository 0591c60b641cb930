#pragma once

#include <optional>

#include "cca/monomial_ideal.hpp"
#include "cca/rational.hpp"

namespace cca {

// Supporting halfspace normal * v >= offset of a Newton polyhedron, with
// normal >= 0 componentwise and gcd(normal) = 1.
struct Facet {
  std::vector<Int> normal;
  Int offset;
};

// Newton polyhedron NP(a) = conv(exponents) + the nonnegative orthant of an
// m-primary monomial ideal, held as an exact halfspace description. The
// facet list is complete for membership: a point lies in NP(a) iff it
// satisfies every inequality and is componentwise nonnegative.
struct NewtonPolyhedron {
  RingPtr ring;
  std::vector<Exponent> gens;
  std::vector<Facet> facets;
};

// Supports one to three variables; throws DomainError beyond that or when
// the ideal misses a pure power of some variable.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

// v in scale * NP(a), by the cached facets. Exact integer arithmetic.
bool np_contains(const NewtonPolyhedron& np, const Exponent& v,
                 const Int& scale = Int(1));

// Same predicate through the rational simplex; independent of the facet
// route and valid in any dimension.
bool np_contains_lp(const std::vector<Exponent>& gens, const Exponent& v,
                    long scale = 1);

// Integral closure of a^n: the monomial ideal of all lattice points of
// n * NP(a).
MonomialIdeal integral_closure_power(const NewtonPolyhedron& np, unsigned n);
MonomialIdeal integral_closure(const MonomialIdeal& a);
bool is_integrally_closed(const MonomialIdeal& a);

struct NormalityReport {
  unsigned window = 0;
  bool normal = false;
  // First power whose closure is strictly larger, with a witness monomial
  // integral over a^n but outside it.
  std::optional<unsigned> failing_power;
  std::optional<Exponent> witness;
};

// Checks closure(a^n) == a^n for n = 1..window.
NormalityReport normality_report(const MonomialIdeal& a, unsigned window);

// Volume of the bounded complement of NP(a) inside the orthant. Satisfies
// d! * covolume = multiplicity of a.
Rational covolume(const NewtonPolyhedron& np);

}  // namespace cca
