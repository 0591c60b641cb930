#include "cca/polynomial.hpp"

#include <algorithm>
#include <map>

#include "cca/errors.hpp"

namespace cca {

const Term& Polynomial::leading_term() const {
  if (terms.empty()) throw DomainError("zero polynomial has no leading term");
  return terms.front();
}

int Polynomial::degree() const {
  if (terms.empty()) return -1;
  return total_degree(terms.front().mono);
}

Polynomial poly_zero(RingPtr ring) { return Polynomial{std::move(ring), {}}; }

Polynomial poly_constant(RingPtr ring, const FieldElement& c) {
  if (ring->field.is_zero(c)) return poly_zero(std::move(ring));
  Exponent e(ring->nvars(), 0);
  return Polynomial{std::move(ring), {Term{c, std::move(e)}}};
}

Polynomial poly_monomial(RingPtr ring, FieldElement c, Exponent e) {
  if (ring->field.is_zero(c)) return poly_zero(std::move(ring));
  if (e.size() != ring->nvars())
    throw DomainError("exponent vector length does not match ring");
  return Polynomial{std::move(ring), {Term{std::move(c), std::move(e)}}};
}

Polynomial make_polynomial(RingPtr ring, std::vector<Term> terms) {
  const Field& k = ring->field;
  const MonomialOrder& order = ring->order;
  auto greater = [&](const Exponent& a, const Exponent& b) {
    return compare(order, a, b) > 0;
  };
  std::map<Exponent, FieldElement, decltype(greater)> acc(greater);
  for (Term& t : terms) {
    if (t.mono.size() != ring->nvars())
      throw DomainError("exponent vector length does not match ring");
    auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff);
    if (!fresh) it->second = k.add(it->second, t.coeff);
  }
  Polynomial f{std::move(ring), {}};
  f.terms.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (!k.is_zero(coeff)) f.terms.push_back(Term{coeff, mono});
  }
  return f;
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring, g.ring))
    throw DomainError("operands live in different rings");
}

namespace {

// Merges two canonical term lists with coefficients combined by op.
template <class Combine>
Polynomial merge(const Polynomial& f, const Polynomial& g, Combine&& combine) {
  require_same_ring(f, g);
  const Field& k = f.ring->field;
  const MonomialOrder& order = f.ring->order;
  Polynomial r{f.ring, {}};
  r.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    int c = compare(order, f.terms[i].mono, g.terms[j].mono);
    if (c > 0) {
      r.terms.push_back(f.terms[i++]);
    } else if (c < 0) {
      Term t = g.terms[j++];
      t.coeff = combine(k.zero(), t.coeff);
      if (!k.is_zero(t.coeff)) r.terms.push_back(std::move(t));
    } else {
      FieldElement c2 = combine(f.terms[i].coeff, g.terms[j].coeff);
      if (!k.is_zero(c2)) r.terms.push_back(Term{c2, f.terms[i].mono});
      ++i, ++j;
    }
  }
  for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) {
    Term t = g.terms[j];
    t.coeff = combine(k.zero(), t.coeff);
    if (!k.is_zero(t.coeff)) r.terms.push_back(std::move(t));
  }
  return r;
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.ring->field;
  return merge(f, g, [&](const FieldElement& a, const FieldElement& b) {
    return k.add(a, b);
  });
}

Polynomial sub(const Polynomial& f, const Polynomial& g) {
  const Field& k = f.ring->field;
  return merge(f, g, [&](const FieldElement& a, const FieldElement& b) {
    return k.sub(a, b);
  });
}

Polynomial neg(const Polynomial& f) {
  const Field& k = f.ring->field;
  Polynomial r = f;
  for (Term& t : r.terms) t.coeff = k.neg(t.coeff);
  return r;
}

Polynomial mul_term(const Polynomial& f, const FieldElement& c,
                    const Exponent& e) {
  const Field& k = f.ring->field;
  if (k.is_zero(c)) return poly_zero(f.ring);
  Polynomial r{f.ring, {}};
  r.terms.reserve(f.terms.size());
  for (const Term& t : f.terms) {
    FieldElement c2 = k.mul(t.coeff, c);
    if (!k.is_zero(c2)) r.terms.push_back(Term{c2, exp_add(t.mono, e)});
  }
  return r;
}

Polynomial scale(const Polynomial& f, const FieldElement& c) {
  return mul_term(f, c, Exponent(f.ring->nvars(), 0));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> terms;
  terms.reserve(f.terms.size() * g.terms.size());
  const Field& k = f.ring->field;
  for (const Term& a : f.terms)
    for (const Term& b : g.terms)
      terms.push_back(Term{k.mul(a.coeff, b.coeff), exp_add(a.mono, b.mono)});
  return make_polynomial(f.ring, std::move(terms));
}

bool poly_equal(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring, g.ring)) return false;
  if (f.terms.size() != g.terms.size()) return false;
  const Field& k = f.ring->field;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (f.terms[i].mono != g.terms[i].mono) return false;
    if (!k.equal(f.terms[i].coeff, g.terms[i].coeff)) return false;
  }
  return true;
}

int compare_polynomials(const Polynomial& f, const Polynomial& g) {
  if (int c = f.degree() - g.degree()) return c < 0 ? -1 : 1;
  const MonomialOrder& order = f.ring->order;
  const Field& k = f.ring->field;
  const std::size_t n = std::min(f.terms.size(), g.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(order, f.terms[i].mono, g.terms[i].mono)) return c;
    if (!k.equal(f.terms[i].coeff, g.terms[i].coeff))
      return k.to_string(f.terms[i].coeff) < k.to_string(g.terms[i].coeff)
                 ? -1
                 : 1;
  }
  if (f.terms.size() != g.terms.size())
    return f.terms.size() < g.terms.size() ? -1 : 1;
  return 0;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const Field& k = f.ring->field;
  if (k.is_one(f.leading_term().coeff)) return f;
  return scale(f, k.inv(f.leading_term().coeff));
}

namespace {

void print_monomial(const RingDescriptor& ring, const Exponent& e,
                    std::string& out) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.vars[i];
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
}

}  // namespace

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& k = f.ring->field;
  std::string out;
  bool first = true;
  for (const Term& t : f.terms) {
    const bool negative = k.is_negative(t.coeff);
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    FieldElement mag = negative ? k.neg(t.coeff) : t.coeff;
    const bool constant = total_degree(t.mono) == 0;
    if (constant) {
      out += k.to_string(mag);
    } else if (k.is_one(mag)) {
      print_monomial(*f.ring, t.mono, out);
    } else {
      out += k.to_string(mag);
      out += '*';
      print_monomial(*f.ring, t.mono, out);
    }
  }
  return out;
}

}  // namespace cca
