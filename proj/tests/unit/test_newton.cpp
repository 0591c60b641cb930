#include <random>
#include <set>
#include <vector>

#include "cca/errors.hpp"
#include "cca/lp.hpp"
#include "cca/newton.hpp"
#include "doctest.h"
#include "support/random_ideals.hpp"

using namespace cca;

namespace {

RingPtr ring_xy() {
  return make_ring({"x", "y"}, Field::rationals());
}

RingPtr ring_xyz() {
  return make_ring({"x", "y", "z"}, Field::rationals());
}

MonomialIdeal mono(const RingPtr& r, std::vector<Exponent> gens) {
  return make_monomial_ideal(r, std::move(gens));
}

// Lattice points outside n * NP(a), counted over the bounding box given by
// the pure powers. Independent of the closure enumeration.
std::int64_t outside_count(const NewtonPolyhedron& np, unsigned n) {
  const std::size_t d = np.ring->nvars();
  std::vector<int> bound(d, 0);
  for (const Exponent& g : np.gens)
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] > 0 && total_degree(g) == g[i])
        bound[i] = bound[i] == 0 ? g[i] : std::min(bound[i], g[i]);
  std::int64_t count = 0;
  Exponent v(d, 0);
  const Int scale(n);
  auto sweep = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      if (!np_contains(np, v, scale)) ++count;
      return;
    }
    for (v[i] = 0; v[i] < static_cast<int>(n) * bound[i]; ++v[i])
      self(self, i + 1);
    v[i] = 0;
  };
  sweep(sweep, 0);
  return count;
}

}  // namespace

TEST_CASE("closure of (x^2, y^2) gains xy") {
  auto r = ring_xy();
  auto a = mono(r, {{2, 0}, {0, 2}});
  auto closed = integral_closure(a);
  CHECK(mono_equal(closed, mono(r, {{2, 0}, {1, 1}, {0, 2}})));
  CHECK_FALSE(is_integrally_closed(a));
  CHECK(is_integrally_closed(closed));

  auto report = normality_report(a, 3);
  CHECK_FALSE(report.normal);
  REQUIRE(report.failing_power.has_value());
  CHECK(*report.failing_power == 1);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == Exponent{1, 1});
}

TEST_CASE("closure of (x^3, y^3) is the cube of the maximal ideal") {
  auto r = ring_xy();
  auto closed = integral_closure(mono(r, {{3, 0}, {0, 3}}));
  CHECK(mono_equal(closed, mono(r, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})));
}

TEST_CASE("(x^3, xy, y^3) is integrally closed") {
  auto a = mono(ring_xy(), {{3, 0}, {1, 1}, {0, 3}});
  CHECK(is_integrally_closed(a));
  auto report = normality_report(a, 4);
  CHECK(report.normal);
  CHECK(report.window == 4);
  CHECK_FALSE(report.failing_power.has_value());
}

TEST_CASE("powers of the maximal ideal are closed") {
  auto r2 = ring_xy();
  auto r3 = ring_xyz();
  for (unsigned k = 1; k <= 3; ++k) {
    auto m2 = mono_power(mono(r2, {{1, 0}, {0, 1}}), k);
    auto m3 = mono_power(mono(r3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), k);
    CHECK(is_integrally_closed(m2));
    CHECK(is_integrally_closed(m3));
  }
  auto report = normality_report(
      mono_power(mono(r3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2), 3);
  CHECK(report.normal);
}

TEST_CASE("closure of (x^2, y^2, z^2) is the square of the maximal ideal") {
  auto r = ring_xyz();
  auto a = mono(r, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  auto m2 = mono_power(mono(r, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2);
  CHECK(mono_equal(integral_closure(a), m2));
  auto report = normality_report(a, 2);
  CHECK_FALSE(report.normal);
  CHECK(*report.failing_power == 1);
}

TEST_CASE("closure is idempotent and contains the ideal") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 8; ++trial) {
    auto r = trial % 2 == 0 ? ring_xy() : ring_xyz();
    auto a = testsupport::random_primary_monomial_ideal(r, rng, 5);
    auto closed = integral_closure(a);
    CHECK(mono_contains(closed, a));
    CHECK(mono_equal(integral_closure(closed), closed));
    CHECK(is_integrally_closed(closed));
  }
}

TEST_CASE("closure of a power matches the scaled polyhedron") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    auto r = trial % 2 == 0 ? ring_xy() : ring_xyz();
    auto a = testsupport::random_primary_monomial_ideal(r, rng, 4);
    auto np = newton_polyhedron(a);
    for (unsigned n = 1; n <= 3; ++n) {
      auto direct = integral_closure(mono_power(a, n));
      CHECK(mono_equal(integral_closure_power(np, n), direct));
    }
  }
}

TEST_CASE("facet membership agrees with the simplex route") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto r = trial % 2 == 0 ? ring_xy() : ring_xyz();
    const std::size_t d = r->nvars();
    auto a = testsupport::random_primary_monomial_ideal(r, rng, 4);
    auto np = newton_polyhedron(a);
    for (int probe = 0; probe < 40; ++probe) {
      Exponent v(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        v[i] = static_cast<int>(rng() % 7);
      const long scale = 1 + static_cast<long>(rng() % 3);
      CHECK(np_contains(np, v, Int(scale)) == np_contains_lp(a.gens, v, scale));
    }
  }
}

TEST_CASE("membership certified by a bounded power test") {
  // x^v integral over a iff x^(kv) lies in a^k for some k; the converse
  // holds at every k, and small k certifies the examples here.
  std::mt19937_64 rng(4242);
  const unsigned max_k = 12;
  for (int trial = 0; trial < 6; ++trial) {
    auto r = trial % 2 == 0 ? ring_xy() : ring_xyz();
    const std::size_t d = r->nvars();
    auto a = testsupport::random_primary_monomial_ideal(r, rng, 3);
    auto np = newton_polyhedron(a);
    std::vector<MonomialIdeal> powers;
    for (unsigned k = 1; k <= max_k; ++k) powers.push_back(mono_power(a, k));
    for (int probe = 0; probe < 25; ++probe) {
      Exponent v(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        v[i] = static_cast<int>(rng() % 5);
      bool certified = false;
      for (unsigned k = 1; k <= max_k && !certified; ++k) {
        Exponent kv(d, 0);
        for (std::size_t i = 0; i < d; ++i) kv[i] = static_cast<int>(k) * v[i];
        certified = mono_contains(powers[k - 1], kv);
      }
      if (certified) CHECK(np_contains(np, v));
      if (!np_contains(np, v)) CHECK_FALSE(certified);
    }
  }
}

TEST_CASE("ideal membership implies polyhedron membership") {
  std::mt19937_64 rng(17);
  auto r = ring_xyz();
  auto a = testsupport::random_primary_monomial_ideal(r, rng, 4);
  auto np = newton_polyhedron(a);
  for (int probe = 0; probe < 60; ++probe) {
    Exponent v(3, 0);
    for (std::size_t i = 0; i < 3; ++i) v[i] = static_cast<int>(rng() % 8);
    if (mono_contains(a, v)) CHECK(np_contains(np, v));
  }
}

TEST_CASE("simplex route works beyond three variables") {
  std::vector<Exponent> gens = {
      {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
  CHECK(lp_in_shifted_hull(gens, {Rational(1), Rational(1), Rational(1),
                                  Rational(1)}));
  CHECK(np_contains_lp(gens, Exponent{1, 1, 0, 0}));
  CHECK_FALSE(np_contains_lp(gens, Exponent{1, 0, 0, 0}));
}

TEST_CASE("covolume of curated examples") {
  auto r1 = make_ring({"x"}, Field::rationals());
  CHECK(covolume(newton_polyhedron(mono(r1, {{5}}))) == Rational(5));

  auto r2 = ring_xy();
  for (int k = 1; k <= 3; ++k) {
    auto mk = mono_power(mono(r2, {{1, 0}, {0, 1}}), static_cast<unsigned>(k));
    CHECK(covolume(newton_polyhedron(mk)) == make_rational(k * k, 2));
  }
  CHECK(covolume(newton_polyhedron(mono(r2, {{2, 0}, {0, 2}}))) == Rational(2));
  CHECK(covolume(newton_polyhedron(mono(r2, {{2, 0}, {0, 3}}))) == Rational(3));
  // Shoelace over (0,0), (3,0), (1,1), (0,3).
  CHECK(covolume(newton_polyhedron(mono(r2, {{3, 0}, {1, 1}, {0, 3}}))) ==
        Rational(3));

  auto r3 = ring_xyz();
  for (int k = 1; k <= 3; ++k) {
    auto mk = mono_power(mono(r3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                         static_cast<unsigned>(k));
    CHECK(covolume(newton_polyhedron(mk)) == make_rational(k * k * k, 6));
  }
  CHECK(covolume(newton_polyhedron(
            mono(r3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}))) == Rational(5));
  // A generator interior to the only bounded facet must not disturb the
  // area computation.
  CHECK(covolume(newton_polyhedron(mono(
            r3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}))) ==
        make_rational(27, 6));
}

TEST_CASE("complement counts match closed forms") {
  auto r3 = ring_xyz();
  auto m2 = mono_power(mono(r3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 2);
  auto np = newton_polyhedron(m2);
  for (unsigned n = 1; n <= 4; ++n) {
    // Points with coordinate sum below 2n.
    Int expect = binomial(Int(2 * n + 2), 3);
    CHECK(Int(outside_count(np, n)) == expect);
  }
  auto star = newton_polyhedron(
      mono(r3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}));
  for (unsigned n = 1; n <= 3; ++n) {
    Int expect = binomial(Int(3 * n + 2), 3);
    CHECK(Int(outside_count(star, n)) == expect);
  }
}

TEST_CASE("closure length drops below the ideal length when not closed") {
  auto r = ring_xy();
  auto a = mono(r, {{4, 0}, {0, 4}});
  auto closed = integral_closure(a);
  CHECK(mono_equal(closed,
                   mono(r, {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}})));
  CHECK(mono_length(closed) < mono_length(a));
}

TEST_CASE("polyhedron construction rejects bad input") {
  auto r4 = make_ring({"x", "y", "z", "w"}, Field::rationals());
  CHECK_THROWS_AS(
      newton_polyhedron(mono(
          r4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
      DomainError);
  auto r2 = ring_xy();
  CHECK_THROWS_AS(newton_polyhedron(mono(r2, {{1, 0}})), DomainError);
  CHECK_THROWS_AS(newton_polyhedron(mono(r2, {})), DomainError);
}
