#include "cca/monomial_ideal.hpp"

#include <algorithm>

#include "cca/errors.hpp"

namespace cca {

MonomialIdeal make_monomial_ideal(RingPtr ring, std::vector<Exponent> gens) {
  for (const Exponent& e : gens) {
    if (e.size() != ring->nvars())
      throw DomainError("exponent vector length does not match ring");
    for (int x : e)
      if (x < 0) throw DomainError("negative exponent in monomial ideal");
  }
  return MonomialIdeal{std::move(ring), minimal_antichain(std::move(gens))};
}

std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal) {
  std::vector<Exponent> gens;
  gens.reserve(ideal.gens.size());
  for (const Polynomial& g : ideal.gens) {
    if (g.terms.size() != 1) return std::nullopt;
    gens.push_back(g.terms.front().mono);
  }
  return make_monomial_ideal(ideal.ring, std::move(gens));
}

Ideal to_ideal(const MonomialIdeal& m) {
  std::vector<Polynomial> gens;
  gens.reserve(m.gens.size());
  for (const Exponent& e : m.gens)
    gens.push_back(poly_monomial(m.ring, m.ring->field.one(), e));
  return make_ideal(m.ring, std::move(gens));
}

bool mono_contains(const MonomialIdeal& m, const Exponent& e) {
  for (const Exponent& g : m.gens)
    if (divides(g, e)) return true;
  return false;
}

bool mono_contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  for (const Exponent& e : inner.gens)
    if (!mono_contains(outer, e)) return false;
  return true;
}

bool mono_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_ring(a.ring, b.ring) && a.gens == b.gens;
}

namespace {

void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring, b.ring))
    throw DomainError("ideal operands live in different rings");
}

}  // namespace

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Exponent> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_monomial_ideal(a.ring, std::move(gens));
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Exponent> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const Exponent& x : a.gens)
    for (const Exponent& y : b.gens) gens.push_back(exp_add(x, y));
  return make_monomial_ideal(a.ring, std::move(gens));
}

MonomialIdeal mono_power(const MonomialIdeal& a, unsigned n) {
  if (n == 0)
    return make_monomial_ideal(a.ring, {Exponent(a.ring->nvars(), 0)});
  MonomialIdeal acc = a;
  for (unsigned i = 1; i < n; ++i) acc = mono_product(acc, a);
  return acc;
}

MonomialIdeal mono_intersection(const MonomialIdeal& a,
                                const MonomialIdeal& b) {
  require_same(a, b);
  std::vector<Exponent> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const Exponent& x : a.gens)
    for (const Exponent& y : b.gens) gens.push_back(exp_lcm(x, y));
  return make_monomial_ideal(a.ring, std::move(gens));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  if (b.is_zero()) throw DomainError("colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc;
  for (const Exponent& g : b.gens) {
    std::vector<Exponent> gens;
    gens.reserve(a.gens.size());
    for (const Exponent& e : a.gens) gens.push_back(exp_sub_clamped(e, g));
    MonomialIdeal part = make_monomial_ideal(a.ring, std::move(gens));
    if (first) {
      acc = std::move(part);
      first = false;
    } else {
      acc = mono_intersection(acc, part);
    }
  }
  return acc;
}

std::int64_t mono_length(const MonomialIdeal& a) {
  return count_standard_monomials(a.gens, a.ring->nvars());
}

bool mono_is_primary(const MonomialIdeal& a) {
  std::vector<bool> has_pure(a.ring->nvars(), false);
  for (const Exponent& e : a.gens) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (pure && support < 0) return true;  // unit ideal
    if (pure && support >= 0) has_pure[support] = true;
  }
  return std::all_of(has_pure.begin(), has_pure.end(),
                     [](bool b) { return b; });
}

std::string to_string(const MonomialIdeal& a) {
  std::string out = "(";
  bool first = true;
  for (const Exponent& e : a.gens) {
    if (!first) out += ", ";
    first = false;
    out += to_string(poly_monomial(a.ring, a.ring->field.one(), e));
  }
  out += ")";
  return out;
}

}  // namespace cca
