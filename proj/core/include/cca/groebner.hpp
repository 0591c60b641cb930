#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "cca/ideal.hpp"

namespace cca {

struct GroebnerConfig {
  // Pair reductions allowed per basis computation.
  std::uint64_t max_pair_reductions = 1'000'000;
  // Cap on intermediate basis elements per computation.
  std::size_t max_basis_size = 10'000;
  // Single division steps allowed per basis computation. One pair
  // reduction can take arbitrarily many steps on dense inputs, so the
  // pair budget alone does not bound the step count.
  std::uint64_t max_reduction_steps = UINT64_C(1) << 62;
};

// Reduced Groebner basis: monic, autoreduced, sorted descending by leading
// term. Unique for a given ideal and order, so bases can be compared
// element by element.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> polys;
  std::uint64_t pair_reductions = 0;
};

struct EngineStats {
  std::uint64_t bases_computed = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t pair_reductions = 0;
};

// Buchberger engine with Gebauer-Moeller pair pruning and a memo of
// finished bases keyed by the canonical generator list.
class Engine {
 public:
  explicit Engine(GroebnerConfig config = {}) : config_(config) {}

  const GroebnerBasis& reduced_basis(const Ideal& ideal);

  // Full normal form (leading and lower terms) against a basis.
  Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) const;

  bool contains(const Ideal& ideal, const Polynomial& f);
  // True when every generator of inner reduces to zero modulo outer.
  bool contains(const Ideal& outer, const Ideal& inner);
  bool equal(const Ideal& a, const Ideal& b);

  // Generator level combinations; no basis computation involved.
  Ideal sum(const Ideal& a, const Ideal& b) const;
  Ideal product(const Ideal& a, const Ideal& b) const;
  Ideal power(const Ideal& a, unsigned n) const;

  // Elimination with one auxiliary variable in a block order.
  Ideal intersection(const Ideal& a, const Ideal& b);
  // (a : b), via intersections with the principal ideals of b's generators.
  Ideal colon(const Ideal& a, const Ideal& b);

  // Dimension of R/a as a vector space. Throws NotArtinianError when some
  // variable has no pure power among the leading terms.
  std::int64_t quotient_length(const Ideal& a);

  const GroebnerConfig& config() const { return config_; }
  const EngineStats& stats() const { return stats_; }

 private:
  const GroebnerBasis& buchberger(const Ideal& ideal);
  Ideal principal_colon(const Ideal& a, const Polynomial& g);

  GroebnerConfig config_;
  EngineStats stats_;
  std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> memo_;
};

// Length of the localization at the origin, the colength of a in the local
// ring at the ideal of the variables. Computed as the length of
// A/(a + m^n) for growing n; once two values agree the sequence is final,
// because m^n <= a + m^{n+1} forces m^n into a locally. Unlike
// quotient_length this ignores zeros of a away from the origin. Throws
// ResourceError when n passes max_power without stabilizing. A caller who
// knows a lower bound on the answer can start the scan at the first n
// whose box can hold it, via min_power.
std::int64_t local_quotient_length(const Ideal& a, Engine& eng,
                                   unsigned max_power = 48,
                                   unsigned min_power = 2);

}  // namespace cca
