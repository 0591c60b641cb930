#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"

namespace cca {

struct ReductionSearchConfig {
  // Fresh coefficient draws before giving up on a certified reduction.
  unsigned max_attempts = 10;
  // Combination coefficients are drawn from [-range, range] over Q and
  // from the whole field otherwise.
  int coefficient_range = 500;
  // Cap on the reduction number search.
  unsigned max_reduction_number = 25;
  std::uint64_t seed = 1;
};

// Parameter ideal c = (f_1..f_d) inside a with the same multiplicity at
// the origin, which makes it a reduction there: some power of a satisfies
// a^{r+1} = c a^r in the local ring.
struct MinimalReduction {
  Ideal ideal;
  std::vector<Polynomial> elements;
  // Least r with c a^r = a^{r+1} locally.
  unsigned reduction_number = 0;
  // sigma_i = length(A/c a^i) - length(A/a^{i+1}) at the origin for
  // i = 0..r; the final entry is the certifying zero.
  std::vector<Int> sigma;
  unsigned attempts = 1;
  // Certified length of A/c at the origin; equals e0 of a.
  Int local_colength = 0;
};

// Draws d random combinations of the generators until the length of A/c
// at the origin equals e0; that equality certifies c as a reduction of a.
// The reduction number and the sigma sequence come from one shared length
// sweep. Throws CertificationError when every attempt fails and
// ResourceError when the search passes max_reduction_number.
MinimalReduction minimal_reduction(const Ideal& a, Engine& eng, const Int& e0,
                                   const ReductionSearchConfig& cfg = {});

// Convenience overload that computes e0 itself.
MinimalReduction minimal_reduction(const Ideal& a, Engine& eng,
                                   const ReductionSearchConfig& cfg = {});

// Certified upper bound on the reduction number of an m-primary monomial
// ideal, computed over F_p to dodge rational coefficient growth. The
// generators have integer coefficients, so every truncated coefficient
// matrix reduces entrywise mod p and its rank can only drop; a length
// computed over F_p is therefore at least the rational length of the same
// ideal read with integer coefficients. Both certified quantities are
// rational lower bounds already (length(A/c) >= e0 for d combinations
// inside a, and length(A/c a^j) >= length(A/a^{j+1}) by containment), so
// meeting the bound over F_p pins the rational value too, and the F_p
// draw lifts verbatim to integer coefficients. A d-generated reduction is
// minimal,
// which makes the certified stage an upper bound for every reduction.
// Returns the least certified r <= limit, or nullopt when no draw
// certifies one (true reduction number above limit, or unlucky draws).
std::optional<unsigned> bounded_reduction_number(
    const MonomialIdeal& a, const Int& e0, unsigned limit,
    const ReductionSearchConfig& cfg = {},
    std::uint64_t prime = 2147483647ULL);

// Window certificate that (a^{n+1} : y) = a^n for n in [from, upto]; the
// equality holds for n large exactly when y is superficial for a and stays
// a nonzerodivisor.
struct SuperficialWindow {
  Polynomial element;
  unsigned from = 0;
  unsigned upto = 0;
  bool verified = false;
  // First n in the window where the colon is strictly larger, if any.
  std::optional<unsigned> failing_index;
};

SuperficialWindow superficial_window(const Ideal& a, const Polynomial& y,
                                     Engine& eng, unsigned from,
                                     unsigned upto);

}  // namespace cca
