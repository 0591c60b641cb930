#include "cca/groebner.hpp"

#include <algorithm>
#include <cassert>

#include "cca/errors.hpp"

namespace cca {

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Exponent lcm;
  int degree;
};

// Deterministic pair selection: lowest lcm degree, then lcm order, then
// indices. The normal strategy for graded orders.
bool pair_before(const MonomialOrder& order, const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (int c = compare(order, a.lcm, b.lcm)) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class Buchberger {
 public:
  Buchberger(const Ideal& ideal, const GroebnerConfig& config)
      : ring_(ideal.ring), config_(config) {
    for (const Polynomial& g : ideal.gens) append(make_monic(g));
  }

  GroebnerBasis run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_before(ring_->order, pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));

      Polynomial s = spoly(p);
      Polynomial r = reduce(s);
      bump_budget();
      if (!r.is_zero()) append(make_monic(r));
    }
    return finalize();
  }

 private:
  void bump_budget() {
    ++reductions_;
    if (reductions_ > config_.max_pair_reductions)
      throw ResourceError(
          "pair reduction budget exhausted (" +
          std::to_string(config_.max_pair_reductions) + " pairs)");
  }

  void bump_steps() const {
    ++steps_;
    if (steps_ > config_.max_reduction_steps)
      throw ResourceError(
          "reduction step budget exhausted (" +
          std::to_string(config_.max_reduction_steps) + " steps)");
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    const Exponent& lf = f.leading_term().mono;
    const Exponent& lg = g.leading_term().mono;
    const FieldElement one = ring_->field.one();
    return sub(mul_term(f, one, exp_sub(p.lcm, lf)),
               mul_term(g, one, exp_sub(p.lcm, lg)));
  }

  // Full normal form against the current basis, scanning in index order.
  Polynomial reduce(const Polynomial& f) const {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
      bump_steps();
      const Term& lt = p.leading_term();
      bool reduced = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!divides(lts_[i], lt.mono)) continue;
        p = sub(p, mul_term(basis_[i], lt.coeff, exp_sub(lt.mono, lts_[i])));
        reduced = true;
        break;
      }
      if (!reduced) {
        remainder.push_back(lt);
        p.terms.erase(p.terms.begin());
      }
    }
    return Polynomial{ring_, std::move(remainder)};
  }

  // Gebauer-Moeller update for one new basis element.
  void append(Polynomial g) {
    const Exponent lt = g.leading_term().mono;
    const std::size_t t = basis_.size();

    // Chain criterion on surviving old pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      return divides(lt, p.lcm) && exp_lcm(lts_[p.i], lt) != p.lcm &&
             exp_lcm(lts_[p.j], lt) != p.lcm;
    });

    // Candidate pairs (i, t), pruned among themselves: process by
    // ascending lcm and keep only those no kept lcm divides.
    std::vector<Pair> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
      Exponent l = exp_lcm(lts_[i], lt);
      cand.push_back(Pair{i, t, std::move(l), 0});
      cand.back().degree = total_degree(cand.back().lcm);
    }
    std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
      return pair_before(ring_->order, a, b);
    });
    std::vector<Pair> kept;
    for (Pair& c : cand) {
      bool redundant = false;
      for (const Pair& k : kept) {
        if (divides(k.lcm, c.lcm)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(std::move(c));
    }
    for (Pair& k : kept) {
      if (exp_coprime(lts_[k.i], lt)) continue;  // product criterion
      pairs_.push_back(std::move(k));
    }

    basis_.push_back(std::move(g));
    lts_.push_back(lt);
    if (basis_.size() > config_.max_basis_size)
      throw ResourceError("basis size budget exhausted (" +
                          std::to_string(config_.max_basis_size) +
                          " elements)");
  }

  GroebnerBasis finalize() {
    const std::size_t n = basis_.size();
    std::vector<bool> alive(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n && alive[i]; ++j) {
        if (i == j || !alive[j]) continue;
        if (divides(lts_[j], lts_[i]) && (lts_[j] != lts_[i] || j < i))
          alive[i] = false;
      }
    }
    // Tail reduction against the other survivors.
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (alive[i]) idx.push_back(i);
    for (std::size_t round = 0; round < idx.size(); ++round) {
      const std::size_t i = idx[round];
      Polynomial others_reduced = reduce_against(basis_[i], idx, i);
      basis_[i] = make_monic(others_reduced);
    }
    GroebnerBasis out;
    out.ring = ring_;
    out.pair_reductions = reductions_;
    for (std::size_t i : idx) out.polys.push_back(basis_[i]);
    std::sort(out.polys.begin(), out.polys.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return compare(ring_->order, a.leading_term().mono,
                               b.leading_term().mono) > 0;
              });
    return out;
  }

  Polynomial reduce_against(const Polynomial& f,
                            const std::vector<std::size_t>& idx,
                            std::size_t skip) const {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
      bump_steps();
      const Term& lt = p.leading_term();
      bool reduced = false;
      for (std::size_t i : idx) {
        if (i == skip || !divides(lts_[i], lt.mono)) continue;
        p = sub(p, mul_term(basis_[i], lt.coeff, exp_sub(lt.mono, lts_[i])));
        reduced = true;
        break;
      }
      if (!reduced) {
        remainder.push_back(lt);
        p.terms.erase(p.terms.begin());
      }
    }
    return Polynomial{ring_, std::move(remainder)};
  }

  RingPtr ring_;
  const GroebnerConfig& config_;
  std::vector<Polynomial> basis_;
  std::vector<Exponent> lts_;
  std::vector<Pair> pairs_;
  std::uint64_t reductions_ = 0;
  mutable std::uint64_t steps_ = 0;
};

// First variable name built from `stem` that is not already a ring variable.
std::string fresh_var(const RingDescriptor& ring, const std::string& stem) {
  if (!ring.var_index(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string name = stem + std::to_string(i);
    if (!ring.var_index(name)) return name;
  }
}

Exponent prepend(const Exponent& e, int head) {
  Exponent out;
  out.reserve(e.size() + 1);
  out.push_back(head);
  out.insert(out.end(), e.begin(), e.end());
  return out;
}

Exponent drop_head(const Exponent& e) {
  return Exponent(e.begin() + 1, e.end());
}

}  // namespace

const GroebnerBasis& Engine::buchberger(const Ideal& ideal) {
  const std::string key = ideal_key(ideal);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++stats_.memo_hits;
    return *it->second;
  }
  Buchberger algo(ideal, config_);
  auto basis = std::make_shared<GroebnerBasis>(algo.run());
  ++stats_.bases_computed;
  stats_.pair_reductions += basis->pair_reductions;
  return *memo_.emplace(key, std::move(basis)).first->second;
}

const GroebnerBasis& Engine::reduced_basis(const Ideal& ideal) {
  return buchberger(ideal);
}

Polynomial Engine::normal_form(const Polynomial& f,
                               const GroebnerBasis& basis) const {
  if (!same_ring(f.ring, basis.ring))
    throw DomainError("polynomial and basis live in different rings");
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (const Polynomial& g : basis.polys) {
      const Exponent& lg = g.leading_term().mono;
      if (!divides(lg, lt.mono)) continue;
      p = sub(p, mul_term(g, lt.coeff, exp_sub(lt.mono, lg)));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      p.terms.erase(p.terms.begin());
    }
  }
  return Polynomial{f.ring, std::move(remainder)};
}

bool Engine::contains(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  return normal_form(f, buchberger(ideal)).is_zero();
}

bool Engine::contains(const Ideal& outer, const Ideal& inner) {
  for (const Polynomial& g : inner.gens)
    if (!contains(outer, g)) return false;
  return true;
}

bool Engine::equal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring)) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const GroebnerBasis& ga = buchberger(a);
  const GroebnerBasis& gb = buchberger(b);
  if (ga.polys.size() != gb.polys.size()) return false;
  for (std::size_t i = 0; i < ga.polys.size(); ++i)
    if (!poly_equal(ga.polys[i], gb.polys[i])) return false;
  return true;
}

Ideal Engine::sum(const Ideal& a, const Ideal& b) const {
  if (!same_ring(a.ring, b.ring))
    throw DomainError("ideal operands live in different rings");
  std::vector<Polynomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.ring, std::move(gens));
}

Ideal Engine::product(const Ideal& a, const Ideal& b) const {
  if (!same_ring(a.ring, b.ring))
    throw DomainError("ideal operands live in different rings");
  std::vector<Polynomial> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const Polynomial& f : a.gens)
    for (const Polynomial& g : b.gens) gens.push_back(mul(f, g));
  return make_ideal(a.ring, std::move(gens));
}

Ideal Engine::power(const Ideal& a, unsigned n) const {
  if (n == 0)
    return make_ideal(a.ring, {poly_constant(a.ring, a.ring->field.one())});
  Ideal acc = a;
  for (unsigned i = 1; i < n; ++i) acc = product(acc, a);
  return acc;
}

Ideal Engine::intersection(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring))
    throw DomainError("ideal operands live in different rings");
  if (a.is_zero() || b.is_zero()) return make_ideal(a.ring, {});

  const RingDescriptor& base = *a.ring;
  std::vector<std::string> vars;
  vars.push_back(fresh_var(base, "t"));
  vars.insert(vars.end(), base.vars.begin(), base.vars.end());
  RingPtr ext = make_ring(std::move(vars), base.field,
                          MonomialOrder{OrderKind::block, 1});

  auto lift = [&](const Polynomial& f, bool times_t,
                  bool one_minus_t) -> Polynomial {
    std::vector<Term> terms;
    for (const Term& t : f.terms) {
      if (times_t) {
        terms.push_back(Term{t.coeff, prepend(t.mono, 1)});
      } else if (one_minus_t) {
        terms.push_back(Term{t.coeff, prepend(t.mono, 0)});
        terms.push_back(Term{ext->field.neg(t.coeff), prepend(t.mono, 1)});
      }
    }
    return make_polynomial(ext, std::move(terms));
  };

  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens) gens.push_back(lift(f, true, false));
  for (const Polynomial& g : b.gens) gens.push_back(lift(g, false, true));
  Ideal extended = make_ideal(ext, std::move(gens));
  const GroebnerBasis& gb = buchberger(extended);

  std::vector<Polynomial> result;
  for (const Polynomial& g : gb.polys) {
    bool free_of_t = true;
    for (const Term& t : g.terms) {
      if (t.mono[0] != 0) {
        free_of_t = false;
        break;
      }
    }
    if (!free_of_t) continue;
    std::vector<Term> terms;
    terms.reserve(g.terms.size());
    for (const Term& t : g.terms) terms.push_back(Term{t.coeff, drop_head(t.mono)});
    result.push_back(make_polynomial(a.ring, std::move(terms)));
  }
  Ideal out = make_ideal(a.ring, result);

  // For a graded base order the extracted polynomials are already the
  // reduced basis of the intersection; seed the memo so later calls reuse
  // them.
  if (base.order.kind == OrderKind::grevlex && !out.is_zero()) {
    const std::string key = ideal_key(out);
    if (!memo_.contains(key)) {
      auto seeded = std::make_shared<GroebnerBasis>();
      seeded->ring = a.ring;
      seeded->polys = result;
      std::sort(seeded->polys.begin(), seeded->polys.end(),
                [&](const Polynomial& x, const Polynomial& y) {
                  return compare(base.order, x.leading_term().mono,
                                 y.leading_term().mono) > 0;
                });
      memo_.emplace(key, std::move(seeded));
    }
  }
  return out;
}

Ideal Engine::principal_colon(const Ideal& a, const Polynomial& g) {
  Ideal meet = intersection(a, make_ideal(a.ring, {g}));
  const Field& k = a.ring->field;
  std::vector<Polynomial> gens;
  for (const Polynomial& h : meet.gens) {
    // Exact division h / g.
    Polynomial p = h;
    std::vector<Term> quotient;
    const Exponent& lg = g.leading_term().mono;
    const FieldElement lcg = g.leading_term().coeff;
    while (!p.is_zero()) {
      const Term& lt = p.leading_term();
      if (!divides(lg, lt.mono))
        throw Error("internal: intersection element not divisible");
      Term q{k.div(lt.coeff, lcg), exp_sub(lt.mono, lg)};
      p = sub(p, mul_term(g, q.coeff, q.mono));
      quotient.push_back(std::move(q));
    }
    gens.push_back(make_polynomial(a.ring, std::move(quotient)));
  }
  return make_ideal(a.ring, std::move(gens));
}

Ideal Engine::colon(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring, b.ring))
    throw DomainError("ideal operands live in different rings");
  if (b.is_zero()) throw DomainError("colon by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const Polynomial& g : b.gens) {
    Ideal part = principal_colon(a, g);
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc = intersection(acc, part);
    }
  }
  return acc;
}

std::int64_t Engine::quotient_length(const Ideal& a) {
  if (a.is_zero())
    throw NotArtinianError("the zero ideal has an infinite dimensional quotient");
  const GroebnerBasis& gb = buchberger(a);
  const std::size_t n = a.ring->nvars();
  std::vector<Exponent> lts;
  lts.reserve(gb.polys.size());
  for (const Polynomial& g : gb.polys) lts.push_back(g.leading_term().mono);
  // Name the missing variable before delegating to the counter.
  std::vector<bool> has_pure(n, false);
  for (const Exponent& e : lts) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (pure && support >= 0) has_pure[support] = true;
    if (pure && support < 0) return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_pure[i])
      throw NotArtinianError("quotient is infinite dimensional: no pure power "
                             "of " +
                             a.ring->vars[i] + " among the leading terms");
  }
  return count_standard_monomials(minimal_antichain(lts), n);
}

std::int64_t local_quotient_length(const Ideal& a, Engine& eng,
                                   unsigned max_power, unsigned min_power) {
  std::int64_t prev = -1;
  for (unsigned n = min_power < 2 ? 2 : min_power; n <= max_power; ++n) {
    const std::int64_t len =
        eng.quotient_length(eng.sum(a, maximal_ideal_power(a.ring, n)));
    if (len == prev) return len;
    prev = len;
  }
  throw ResourceError("length at the origin did not stabilize below the m^" +
                      std::to_string(max_power) + " cutoff");
}

}  // namespace cca
