#include <vector>

#include "cca/errors.hpp"
#include "cca/filtration.hpp"
#include "cca/parse.hpp"
#include "doctest.h"
#include "support/random_ideals.hpp"

using namespace cca;

namespace {

RingPtr ring_xy() {
  return make_ring({"x", "y"}, Field::rationals());
}

MonomialIdeal mono(const RingPtr& r, std::vector<Exponent> gens) {
  return make_monomial_ideal(r, std::move(gens));
}

MonomialIdeal max_power(const RingPtr& r, unsigned k) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Exponent e(r->nvars(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return mono_power(make_monomial_ideal(r, std::move(gens)), k);
}

}  // namespace

TEST_CASE("adic stages are powers") {
  auto r = ring_xy();
  Engine eng;
  auto f = Filtration::adic(mono(r, {{2, 0}, {1, 1}, {0, 2}}));
  CHECK(mono_equal(*f.term(eng, 2).mono, max_power(r, 4)));
  CHECK(mono_equal(*f.term(eng, 0).mono, mono(r, {{0, 0}})));
  f.check_axioms(eng, 4);
}

TEST_CASE("adic filtration from polynomial generators") {
  auto r = ring_xy();
  Engine eng;
  auto f = Filtration::adic(ideal_from_strings(r, {"x^2 - y^3", "x*y"}));
  CHECK_FALSE(f.term(eng, 1).mono.has_value());
  f.check_axioms(eng, 3);
}

TEST_CASE("closure stages of (x^2, y^2) are powers of the maximal ideal") {
  auto r = ring_xy();
  Engine eng;
  auto f = Filtration::closure(mono(r, {{2, 0}, {0, 2}}));
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(mono_equal(*f.term(eng, n).mono, max_power(r, 2 * n)));
  f.check_axioms(eng, 4);
}

TEST_CASE("colon chain recovers the missing degree four monomial") {
  auto r = ring_xy();
  Engine eng;
  auto base = mono(r, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  auto stage = ratliff_rush_stage(base, 1);
  CHECK(mono_equal(stage, max_power(r, 4)));

  // Same stage through the basis engine on polynomial generators.
  auto poly_stage = ratliff_rush_stage(eng, to_ideal(base), 1);
  auto back = as_monomial_ideal(poly_stage);
  REQUIRE(back.has_value());
  CHECK(mono_equal(*back, stage));

  // The witness monomial multiplies the base into its square.
  auto witness = parse_polynomial("x^2*y^2", r);
  CHECK(eng.contains(eng.colon(eng.power(to_ideal(base), 2), to_ideal(base)),
                     witness));
  CHECK_FALSE(mono_contains(base, Exponent{2, 2}));
}

TEST_CASE("stage one of a stable ideal stays put") {
  auto r = ring_xy();
  auto m2 = max_power(r, 2);
  Engine eng;
  auto f = Filtration::ratliff_rush(m2);
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(mono_equal(*f.term(eng, n).mono, max_power(r, 2 * n)));
  f.check_axioms(eng, 4);
}

TEST_CASE("veronese picks every second stage") {
  auto r = ring_xy();
  Engine eng;
  auto f = Filtration::veronese(Filtration::adic(max_power(r, 1)), 2);
  CHECK(mono_equal(*f.term(eng, 3).mono, max_power(r, 6)));
  f.check_axioms(eng, 4);
  CHECK_THROWS_AS(Filtration::veronese(Filtration::adic(max_power(r, 1)), 0),
                  DomainError);
}

TEST_CASE("shift drops the leading stages") {
  auto r = ring_xy();
  Engine eng;
  auto f = Filtration::shift(Filtration::adic(max_power(r, 2)), 1);
  CHECK(mono_equal(*f.term(eng, 0).mono, max_power(r, 2)));
  CHECK(mono_equal(*f.term(eng, 2).mono, max_power(r, 6)));
  f.check_axioms(eng, 3);
}

TEST_CASE("descriptions stay stable") {
  auto r = ring_xy();
  auto f = Filtration::veronese(
      Filtration::shift(Filtration::adic(max_power(r, 1)), 1), 2);
  CHECK(f.describe() == "veronese[2]{shift[1]{adic{" +
                            ideal_key(to_ideal(max_power(r, 1))) + "}}}");
}

TEST_CASE("monomial and engine stages agree on random input") {
  std::mt19937_64 rng(321);
  auto r = ring_xy();
  Engine eng;
  for (int trial = 0; trial < 4; ++trial) {
    auto base = testsupport::random_primary_monomial_ideal(r, rng, 4);
    for (unsigned n = 1; n <= 2; ++n) {
      auto fast = ratliff_rush_stage(base, n);
      auto slow = as_monomial_ideal(ratliff_rush_stage(eng, to_ideal(base), n));
      REQUIRE(slow.has_value());
      CHECK(mono_equal(fast, *slow));
    }
  }
}
