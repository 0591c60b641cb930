#include "cca/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "cca/errors.hpp"

namespace cca {

int total_degree(const Exponent& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  assert(divides(b, a));
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent exp_sub_clamped(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i] - b[i], 0);
  return r;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_coprime(const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

// a <, =, > b by graded reverse lexicographic order on e[lo, hi).
int grevlex_range(const Exponent& a, const Exponent& b, std::size_t lo,
                  std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare(const MonomialOrder& order, const Exponent& a, const Exponent& b) {
  assert(a.size() == b.size());
  switch (order.kind) {
    case OrderKind::grevlex:
      return grevlex_range(a, b, 0, a.size());
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::block: {
      const std::size_t k = order.block_size;
      if (int c = grevlex_range(a, b, 0, k)) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::vector<Exponent> minimal_antichain(std::vector<Exponent> gens) {
  const MonomialOrder grevlex{};
  std::sort(gens.begin(), gens.end(),
            [&](const Exponent& a, const Exponent& b) {
              return compare(grevlex, a, b) < 0;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> minimal;
  for (const Exponent& g : gens) {
    bool dominated = false;
    for (const Exponent& m : minimal) {
      if (divides(m, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(g);
  }
  std::reverse(minimal.begin(), minimal.end());
  return minimal;
}

std::int64_t count_standard_monomials(const std::vector<Exponent>& lts,
                                      std::size_t nvars) {
  std::vector<int> bound(nvars, -1);
  for (const Exponent& e : lts) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (pure && support >= 0) {
      int& b = bound[support];
      if (b < 0 || e[support] < b) b = e[support];
    }
    if (pure && support < 0) return 0;  // unit ideal
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (bound[i] < 0)
      throw NotArtinianError("no pure power in variable " + std::to_string(i) +
                             " among leading terms");
  }

  std::vector<Exponent> sorted = lts;
  std::sort(sorted.begin(), sorted.end(),
            [](const Exponent& a, const Exponent& b) {
              return total_degree(a) < total_degree(b);
            });

  std::int64_t count = 0;
  Exponent v(nvars, 0);
  // Depth first sweep of the box below the pure power bounds.
  auto sweep = [&](auto&& self, std::size_t i) -> void {
    if (i == nvars) {
      for (const Exponent& e : sorted)
        if (divides(e, v)) return;
      ++count;
      return;
    }
    for (int x = 0; x < bound[i]; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
    v[i] = 0;
  };
  sweep(sweep, 0);
  return count;
}

}  // namespace cca
