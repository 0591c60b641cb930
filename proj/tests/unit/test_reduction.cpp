#include <vector>

#include "cca/errors.hpp"
#include "cca/parse.hpp"
#include "cca/reduction.hpp"
#include "doctest.h"

using namespace cca;

namespace {

RingPtr ring_q(unsigned d) {
  std::vector<std::string> vars = {"x", "y", "z"};
  vars.resize(d);
  return make_ring(vars, Field::rationals());
}

Ideal max_power(const RingPtr& r, unsigned k) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Exponent e(r->nvars(), 0);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return to_ideal(mono_power(make_monomial_ideal(r, std::move(gens)), k));
}

std::vector<Int> ints(std::vector<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("square of the maximal ideal in two variables") {
  Engine eng;
  auto a = max_power(ring_q(2), 2);
  auto red = minimal_reduction(a, eng, Int(4));
  CHECK(red.ideal.gens.size() == 2);
  CHECK(red.reduction_number == 1);
  CHECK(red.sigma == ints({1, 0}));
  CHECK(eng.quotient_length(red.ideal) == 4);
  CHECK(eng.contains(a, red.ideal));
}

TEST_CASE("square of the maximal ideal in three variables") {
  Engine eng;
  auto a = max_power(ring_q(3), 2);
  auto red = minimal_reduction(a, eng, Int(8));
  CHECK(red.reduction_number == 1);
  CHECK(red.sigma == ints({4, 0}));
}

TEST_CASE("cube of the maximal ideal in two variables") {
  Engine eng;
  auto a = max_power(ring_q(2), 3);
  auto red = minimal_reduction(a, eng);
  CHECK(red.reduction_number == 1);
  CHECK(red.sigma == ints({3, 0}));
}

TEST_CASE("a parameter ideal reduces itself") {
  Engine eng;
  auto r = ring_q(2);
  auto a = to_ideal(make_monomial_ideal(r, {{2, 0}, {0, 3}}));
  auto red = minimal_reduction(a, eng, Int(6));
  CHECK(red.attempts == 1);
  CHECK(red.reduction_number == 0);
  CHECK(red.sigma == ints({0}));
  CHECK(eng.equal(red.ideal, a));
}

TEST_CASE("wrong multiplicity is rejected") {
  Engine eng;
  auto a = max_power(ring_q(2), 2);
  ReductionSearchConfig cfg;
  cfg.max_attempts = 3;
  CHECK_THROWS_AS(minimal_reduction(a, eng, Int(5), cfg), CertificationError);
}

TEST_CASE("too few generators is rejected") {
  Engine eng;
  auto r = ring_q(2);
  auto a = to_ideal(make_monomial_ideal(r, {{2, 0}}));
  CHECK_THROWS_AS(minimal_reduction(a, eng, Int(2)), DomainError);
}

TEST_CASE("window certificate for a superficial element") {
  Engine eng;
  auto r = ring_q(2);
  auto a = max_power(r, 2);

  // Degree matches the ideal: the colon never grows.
  auto good = superficial_window(a, parse_polynomial("x^2 + x*y - y^2", r),
                                 eng, 1, 4);
  CHECK(good.verified);
  CHECK_FALSE(good.failing_index.has_value());

  // One degree too deep: the colon jumps by one stage.
  auto bad = superficial_window(a, parse_polynomial("x^3", r), eng, 1, 4);
  CHECK_FALSE(bad.verified);
  REQUIRE(bad.failing_index.has_value());
  CHECK(*bad.failing_index == 1);
}

TEST_CASE("reduction elements are superficial in the window") {
  Engine eng;
  auto a = max_power(ring_q(2), 2);
  auto red = minimal_reduction(a, eng, Int(4));
  auto w = superficial_window(a, red.elements[0], eng, 1,
                              red.reduction_number + 3);
  CHECK(w.verified);
}

TEST_CASE("length at the origin ignores distant zeros") {
  Engine eng;
  auto r = ring_q(2);

  // Two simple points; only one sits at the origin.
  auto split = ideal_from_strings(r, {"x^2 - x", "y"});
  CHECK(eng.quotient_length(split) == 2);
  CHECK(local_quotient_length(split, eng) == 1);

  // A unit at the origin, not artinian globally.
  auto unit = ideal_from_strings(r, {"x - 1"});
  CHECK_THROWS_AS((void)eng.quotient_length(unit), NotArtinianError);
  CHECK(local_quotient_length(unit, eng) == 0);

  // Primary at the origin: both lengths agree.
  auto cusp = ideal_from_strings(r, {"x^2 - y^3", "x*y"});
  CHECK(eng.quotient_length(cusp) == 5);
  CHECK(local_quotient_length(cusp, eng) == 5);

  // A curve through the origin never stabilizes.
  auto curve = ideal_from_strings(r, {"y - x^2"});
  CHECK_THROWS_AS((void)local_quotient_length(curve, eng, 12), ResourceError);

  auto m2 = maximal_ideal_power(r, 2);
  CHECK(generator_strings(m2) == std::vector<std::string>{"y^2", "x*y", "x^2"});
}

TEST_CASE("mixed degree generators still admit a certified reduction") {
  // Combinations of generators of different degrees vanish at points away
  // from the origin, so the global colength of c overshoots e0 and only
  // the origin part certifies.
  Engine eng;
  auto r = ring_q(3);
  auto a = to_ideal(make_monomial_ideal(
      r, {{1, 0, 0}, {0, 0, 2}, {0, 3, 1}, {0, 5, 0}}));
  CHECK(eng.quotient_length(a) == 8);

  ReductionSearchConfig cfg;
  cfg.seed = 12348935053183621058ULL;
  auto red = minimal_reduction(a, eng, Int(10), cfg);
  CHECK(red.local_colength == 10);
  CHECK(eng.quotient_length(red.ideal) > 10);
  CHECK(local_quotient_length(red.ideal, eng) == 10);
  CHECK(red.sigma.back() == 0);
  for (const Int& s : red.sigma) CHECK(s >= 0);
  CHECK(eng.contains(a, red.ideal));
}

TEST_CASE("powers of mixed degree ideals get reductions within the step cap") {
  // Squaring spreads the generator degrees further apart and the zeros of
  // a combination away from the origin outweigh the origin part by orders
  // of magnitude; the global basis is hopeless and the search has to fall
  // back to lengths at the origin on its own.
  Engine eng;
  auto r = ring_q(3);
  auto base = make_monomial_ideal(
      r, {{1, 0, 0}, {0, 0, 2}, {0, 3, 1}, {0, 5, 0}});
  auto b = to_ideal(mono_power(base, 2));

  ReductionSearchConfig cfg;
  cfg.seed = 77;
  cfg.max_reduction_number = 6;
  auto red = minimal_reduction(b, eng, Int(80), cfg);
  CHECK(red.local_colength == 80);
  CHECK(red.reduction_number <= 2);
  CHECK(red.sigma.back() == 0);
  CHECK(eng.contains(b, red.ideal));
}
