#pragma once

#include <optional>

#include "cca/ideal.hpp"

namespace cca {

// Monomial ideal held as its unique minimal generating set (an antichain
// under divisibility), sorted grevlex descending.
struct MonomialIdeal {
  RingPtr ring;
  std::vector<Exponent> gens;

  bool is_zero() const { return gens.empty(); }
};

MonomialIdeal make_monomial_ideal(RingPtr ring, std::vector<Exponent> gens);

// Succeeds when every generator is a single term; exponents are taken as
// given (coefficients discarded, they are units).
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal);
Ideal to_ideal(const MonomialIdeal& m);

bool mono_contains(const MonomialIdeal& m, const Exponent& e);
bool mono_contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
bool mono_equal(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_power(const MonomialIdeal& a, unsigned n);
// Pairwise lcms.
MonomialIdeal mono_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
// (a : b) = intersection over generators g of b of { max(e - g, 0) }.
MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b);

// Dimension of R/a as a vector space; throws NotArtinianError unless a
// contains a pure power of every variable.
std::int64_t mono_length(const MonomialIdeal& a);

// True when a pure power of every variable appears among the generators,
// i.e. the quotient is finite dimensional.
bool mono_is_primary(const MonomialIdeal& a);

std::string to_string(const MonomialIdeal& a);

}  // namespace cca
