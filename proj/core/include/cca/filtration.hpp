#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cca/groebner.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/newton.hpp"

namespace cca {

enum class FiltrationKind {
  adic,
  integral_closure,
  ratliff_rush,
  veronese,
  shift,
};

// One stage of a filtration. The monomial form is kept alongside the ideal
// whenever the stage happens to be monomial; downstream length and
// containment queries then skip basis computations.
struct FiltrationTerm {
  Ideal ideal;
  std::optional<MonomialIdeal> mono;
};

// Multiplicative filtration A = a_0 >= a_1 >= a_2 >= ... with
// a_m a_n <= a_{m+n}, generated lazily and cached per stage.
class Filtration {
 public:
  static Filtration adic(Ideal base);
  static Filtration adic(MonomialIdeal base);
  // Stage n is the integral closure of base^n; monomial only.
  static Filtration closure(MonomialIdeal base);
  // Stage n is the union of the colons (base^{n+k} : base^k) over k.
  static Filtration ratliff_rush(Ideal base);
  static Filtration ratliff_rush(MonomialIdeal base);
  // Stage n of the result is stage factor * n of the argument.
  static Filtration veronese(Filtration inner, unsigned factor);
  // Stage n of the result is stage n + offset of the argument. Breaks the
  // a_0 = A axiom on purpose; check_axioms skips that clause.
  static Filtration shift(Filtration inner, unsigned offset);

  FiltrationKind kind() const { return kind_; }
  RingPtr ring() const { return ring_; }
  // Base ideal of an adic, closure, or ratliff_rush filtration.
  const Ideal& base() const { return base_; }

  const FiltrationTerm& term(Engine& eng, unsigned n);

  // Verifies stage containments and products over stages 0..upto. Throws
  // CertificationError on a violation.
  void check_axioms(Engine& eng, unsigned upto);

  std::string describe() const;

 private:
  Filtration() = default;

  const FiltrationTerm& store(unsigned n, Ideal ideal,
                              std::optional<MonomialIdeal> mono);

  FiltrationKind kind_ = FiltrationKind::adic;
  RingPtr ring_;
  Ideal base_;
  std::optional<MonomialIdeal> base_mono_;
  std::optional<NewtonPolyhedron> np_;
  unsigned factor_ = 1;
  unsigned offset_ = 0;
  std::shared_ptr<Filtration> inner_;
  // unique_ptr entries keep term() references stable across cache growth.
  std::vector<std::unique_ptr<FiltrationTerm>> cache_;
};

// Smallest k at which the colon chain (a^{n+k} : a^k) stabilizes is capped
// here; beyond it the chain computation throws ResourceError.
inline constexpr unsigned kRatliffRushChainCap = 20;

// The n-th Ratliff-Rush stage of a directly, without a Filtration object.
Ideal ratliff_rush_stage(Engine& eng, const Ideal& base, unsigned n);
MonomialIdeal ratliff_rush_stage(const MonomialIdeal& base, unsigned n);

}  // namespace cca
