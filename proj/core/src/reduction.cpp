#include "cca/reduction.hpp"

#include <random>
#include <string>
#include <utility>

#include "cca/errors.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

namespace {

Polynomial random_combination(const std::vector<Polynomial>& gens,
                              std::mt19937_64& rng,
                              const ReductionSearchConfig& cfg) {
  const RingPtr& ring = gens.front().ring;
  const Field& k = ring->field;
  Polynomial f = poly_zero(ring);
  for (const Polynomial& g : gens) {
    long lambda;
    if (k.name() == "Q") {
      const long span = 2L * cfg.coefficient_range + 1;
      lambda = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) -
               cfg.coefficient_range;
    } else {
      lambda = static_cast<long>(rng() >> 33);
    }
    f = add(f, scale(g, k.from_int(lambda)));
  }
  return f;
}

// length(A/a^n), through the staircase when a is monomial.
Int power_length(Engine& eng, const Ideal& a,
                 const std::optional<MonomialIdeal>& mono, unsigned n) {
  if (mono) return Int(mono_length(mono_power(*mono, n)));
  return Int(eng.quotient_length(eng.power(a, n)));
}

// a^n with a minimal generator list when a is monomial; the engine power
// multiplies generator lists without pruning.
Ideal power_ideal(Engine& eng, const Ideal& a,
                  const std::optional<MonomialIdeal>& mono, unsigned n) {
  if (mono) return to_ideal(mono_power(*mono, n));
  return eng.power(a, n);
}

// True when every generator is homogeneous of one common degree. Random
// combinations are then homogeneous too, so their zero set is a cone and
// any finite global length is already the length at the origin.
bool equigenerated(const Ideal& a) {
  std::optional<int> degree;
  for (const Polynomial& g : a.gens)
    for (const Term& t : g.terms) {
      const int d = total_degree(t.mono);
      if (!degree)
        degree = d;
      else if (*degree != d)
        return false;
    }
  return true;
}

// First n whose box A/m^n holds at least `lower` monomials. Stabilized
// local lengths of at least `lower` cannot show up before that n, so scans
// start there.
unsigned scan_start(std::size_t nvars, const Int& lower) {
  for (unsigned n = 2; n < 48; ++n) {
    Int box(1);
    for (std::size_t k = 1; k <= nvars; ++k)
      box = box * Int(static_cast<long>(n - 1 + k)) /
            Int(static_cast<long>(k));
    if (box >= lower) return n;
  }
  return 48;
}

// Colength of c at the origin, provided it equals target; -1 otherwise.
// Aborting once the stabilizing sequence passes target keeps rejected
// draws cheap.
Int local_colength_or_reject(const Ideal& c, Engine& eng, const Int& target) {
  Int prev(-1);
  for (unsigned n = scan_start(c.ring->nvars(), target); n <= 48; ++n) {
    const Int len =
        Int(eng.quotient_length(eng.sum(c, maximal_ideal_power(c.ring, n))));
    if (len > target) return Int(-1);
    if (len == prev) return len;
    prev = len;
  }
  return Int(-1);
}

}  // namespace

MinimalReduction minimal_reduction(const Ideal& a, Engine& eng, const Int& e0,
                                   const ReductionSearchConfig& cfg) {
  const std::size_t d = a.ring->nvars();
  if (a.gens.size() < d)
    throw DomainError("need at least " + std::to_string(d) +
                      " generators for a parameter subideal");
  const std::optional<MonomialIdeal> mono = as_monomial_ideal(a);
  const bool graded = equigenerated(a);
  std::mt19937_64 rng(cfg.seed);

  for (unsigned attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    std::vector<Polynomial> elements;
    if (attempt == 1 && a.gens.size() == d) {
      // d generators already form a system of parameters when the length
      // below is finite; no combination needed.
      elements = a.gens;
    } else {
      for (std::size_t i = 0; i < d; ++i)
        elements.push_back(random_combination(a.gens, rng, cfg));
    }
    Ideal c = make_ideal(a.ring, elements);
    if (c.gens.size() != d) continue;

    // Certify length(A/c) = e0 at the origin. For equigenerated a the
    // combinations are homogeneous, their zeros form a cone, and a finite
    // global length is the local one in a single basis. Mixed generator
    // degrees put zeros away from the origin instead, and those can carry
    // far more length than the origin (squaring a mixed ideal already
    // makes the global basis hopeless), so everything runs on truncated
    // lengths at the origin from the start.
    if (graded) {
      try {
        if (Int(eng.quotient_length(c)) != e0) continue;
      } catch (const NotArtinianError&) {
        // The zero cone is positive dimensional through the origin, so
        // this draw is degenerate even locally.
        continue;
      }
    } else {
      if (local_colength_or_reject(c, eng, e0) != e0) continue;
    }

    MinimalReduction result;
    result.ideal = std::move(c);
    result.elements = std::move(elements);
    result.attempts = attempt;
    result.local_colength = e0;
    for (unsigned i = 0;; ++i) {
      if (i > cfg.max_reduction_number)
        throw ResourceError("no power of the base ideal matched c a^r "
                            "within r <= " +
                            std::to_string(cfg.max_reduction_number));
      const Int right = power_length(eng, a, mono, i + 1);
      Int left;
      if (i == 0) {
        left = e0;
      } else {
        Ideal cai = eng.product(result.ideal, power_ideal(eng, a, mono, i));
        left = graded ? Int(eng.quotient_length(cai))
                      : Int(local_quotient_length(cai, eng, 64,
                                                  scan_start(d, right)));
      }
      Int sigma = left - right;
      // c a^i <= a^{i+1} always holds, so a negative gap means the two
      // length computations disagree.
      if (sigma < 0)
        throw CertificationError("negative length gap at step " +
                                 std::to_string(i) +
                                 "; length computations disagree");
      result.sigma.push_back(sigma);
      if (sigma == 0) {
        result.reduction_number = i;
        break;
      }
    }
    return result;
  }
  throw CertificationError(
      "no certified reduction after " + std::to_string(cfg.max_attempts) +
      " attempts; lengths kept disagreeing with the multiplicity");
}

MinimalReduction minimal_reduction(const Ideal& a, Engine& eng,
                                   const ReductionSearchConfig& cfg) {
  Filtration f = Filtration::adic(a);
  return minimal_reduction(a, eng, hilbert_data(f, eng).e[0], cfg);
}

SuperficialWindow superficial_window(const Ideal& a, const Polynomial& y,
                                     Engine& eng, unsigned from,
                                     unsigned upto) {
  SuperficialWindow w;
  w.element = y;
  w.from = from;
  w.upto = upto;
  w.verified = true;
  Ideal principal = make_ideal(a.ring, {y});
  for (unsigned n = from; n <= upto; ++n) {
    Ideal colon = eng.colon(eng.power(a, n + 1), principal);
    // a^n <= (a^{n+1} : y) always holds, so the lengths decide equality.
    if (eng.quotient_length(colon) != eng.quotient_length(eng.power(a, n))) {
      w.verified = false;
      w.failing_index = n;
      break;
    }
  }
  return w;
}

}  // namespace cca
