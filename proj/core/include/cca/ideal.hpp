#pragma once

#include <vector>

#include "cca/polynomial.hpp"

namespace cca {

// Finitely generated ideal, kept as a normalized generator list: no zeros,
// no duplicates, sorted ascending by compare_polynomials. The zero ideal
// has an empty list.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> gens;

  bool is_zero() const { return gens.empty(); }
};

Ideal make_ideal(RingPtr ring, std::vector<Polynomial> gens);

// Convenience: parses each string with parse_polynomial.
Ideal ideal_from_strings(const RingPtr& ring,
                         const std::vector<std::string>& texts);

// n-th power of the ideal of the variables, generated by the monomials of
// degree exactly n.
Ideal maximal_ideal_power(const RingPtr& ring, unsigned n);

std::vector<std::string> generator_strings(const Ideal& ideal);

// Deterministic key describing ring and generators; equal keys mean equal
// generator lists in structurally equal rings.
std::string ideal_key(const Ideal& ideal);

}  // namespace cca
