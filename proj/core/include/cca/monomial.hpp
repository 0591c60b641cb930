#pragma once

#include <cstdint>
#include <vector>

namespace cca {

// Exponent vector of a monomial. Entries are nonnegative; int leaves
// headroom for the arithmetic done on scaled exponents.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// True when x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);

Exponent exp_add(const Exponent& a, const Exponent& b);
// Requires b | a.
Exponent exp_sub(const Exponent& a, const Exponent& b);
// Componentwise max(a - b, 0); exponent vector of x^a : x^b.
Exponent exp_sub_clamped(const Exponent& a, const Exponent& b);
Exponent exp_lcm(const Exponent& a, const Exponent& b);
bool exp_coprime(const Exponent& a, const Exponent& b);

enum class OrderKind { grevlex, lex, block };

// block: the first block_size variables are compared by grevlex first,
// then the remaining ones; monomials involving the leading block always
// dominate, so the order eliminates that block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block_size = 0;

  bool operator==(const MonomialOrder&) const = default;
};

// Returns -1, 0 or +1 as a <, =, > b in the given order.
int compare(const MonomialOrder& order, const Exponent& a, const Exponent& b);

// Removes duplicates and every vector dominated by another one, then sorts
// grevlex descending. The result is the unique minimal generating set of
// the monomial ideal spanned by the input.
std::vector<Exponent> minimal_antichain(std::vector<Exponent> gens);

// Number of monomials outside the monomial ideal generated by lts.
// Requires a pure power of every variable among the lts; throws
// NotArtinianError naming a missing variable otherwise.
std::int64_t count_standard_monomials(const std::vector<Exponent>& lts,
                                      std::size_t nvars);

}  // namespace cca
