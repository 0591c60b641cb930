#include "cca/ideal.hpp"

#include <algorithm>

#include "cca/errors.hpp"
#include "cca/parse.hpp"

namespace cca {

Ideal make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> kept;
  kept.reserve(gens.size());
  for (Polynomial& g : gens) {
    if (!same_ring(g.ring, ring))
      throw DomainError("generator lives in a different ring");
    if (!g.is_zero()) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return compare_polynomials(a, b) < 0;
            });
  kept.erase(std::unique(kept.begin(), kept.end(),
                         [](const Polynomial& a, const Polynomial& b) {
                           return poly_equal(a, b);
                         }),
             kept.end());
  return Ideal{std::move(ring), std::move(kept)};
}

Ideal ideal_from_strings(const RingPtr& ring,
                         const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const std::string& t : texts) gens.push_back(parse_polynomial(t, ring));
  return make_ideal(ring, std::move(gens));
}

Ideal maximal_ideal_power(const RingPtr& ring, unsigned n) {
  std::vector<Polynomial> gens;
  Exponent current(ring->nvars(), 0);
  // Walk the compositions of n into nvars parts.
  auto emit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == current.size()) {
      current[pos] = static_cast<int>(left);
      gens.push_back(poly_monomial(ring, ring->field.one(), current));
      return;
    }
    for (unsigned take = 0; take <= left; ++take) {
      current[pos] = static_cast<int>(take);
      self(self, pos + 1, left - take);
    }
  };
  emit(emit, 0, n);
  return make_ideal(ring, std::move(gens));
}

std::vector<std::string> generator_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.gens.size());
  for (const Polynomial& g : ideal.gens) out.push_back(to_string(g));
  return out;
}

std::string ideal_key(const Ideal& ideal) {
  std::string key = ideal.ring->field.name();
  key += '[';
  for (const std::string& v : ideal.ring->vars) {
    key += v;
    key += ',';
  }
  key += "]#";
  key += std::to_string(static_cast<int>(ideal.ring->order.kind));
  key += ':';
  key += std::to_string(ideal.ring->order.block_size);
  for (const Polynomial& g : ideal.gens) {
    key += '|';
    key += to_string(g);
  }
  return key;
}

}  // namespace cca
