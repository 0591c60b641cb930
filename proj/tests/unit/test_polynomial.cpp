#include <doctest.h>

#include "cca/errors.hpp"
#include "cca/parse.hpp"
#include "cca/polynomial.hpp"

using namespace cca;

namespace {

RingPtr qxy() { return make_ring({"x", "y"}, Field::rationals()); }

Polynomial p(const RingPtr& r, const char* text) {
  return parse_polynomial(text, r);
}

}  // namespace

TEST_CASE("canonical term order and normalization") {
  auto r = qxy();
  Polynomial f = make_polynomial(
      r, {Term{r->field.from_int(1), {0, 2}}, Term{r->field.from_int(3), {2, 0}},
          Term{r->field.from_int(-3), {2, 0}}, Term{r->field.from_int(2), {1, 1}}});
  // The x^2 terms cancel; xy > y^2 in grevlex.
  CHECK(to_string(f) == "2*x*y + y^2");
  CHECK(f.degree() == 2);
  CHECK(f.leading_term().mono == Exponent{1, 1});
}

TEST_CASE("ring axioms on sampled polynomials") {
  auto r = qxy();
  Polynomial f = p(r, "x^2 - 2*x*y + 1/3");
  Polynomial g = p(r, "y^3 + x");
  Polynomial h = p(r, "7*x*y - y");

  CHECK(poly_equal(add(f, g), add(g, f)));
  CHECK(poly_equal(mul(f, g), mul(g, f)));
  CHECK(poly_equal(add(add(f, g), h), add(f, add(g, h))));
  CHECK(poly_equal(mul(mul(f, g), h), mul(f, mul(g, h))));
  CHECK(poly_equal(mul(f, add(g, h)), add(mul(f, g), mul(f, h))));
  CHECK(poly_equal(sub(f, f), poly_zero(r)));
  CHECK(poly_equal(mul(f, poly_constant(r, r->field.one())), f));
  CHECK(mul(f, poly_zero(r)).is_zero());
}

TEST_CASE("permuted operand chains agree exactly") {
  auto r = qxy();
  Polynomial a = p(r, "1/2*x - y");
  Polynomial b = p(r, "x^3 + 1/7");
  Polynomial c = p(r, "y^2 - 5");
  Polynomial lhs = add(mul(a, b), mul(a, c));
  Polynomial rhs = mul(a, add(c, b));
  CHECK(poly_equal(lhs, rhs));
  CHECK(to_string(lhs) == to_string(rhs));
}

TEST_CASE("printing") {
  auto r = qxy();
  CHECK(to_string(p(r, "x^2 + 0*y")) == "x^2");
  CHECK(to_string(p(r, "y - x")) == "-x + y");
  CHECK(to_string(p(r, "2/4*x")) == "1/2*x");
  CHECK(to_string(p(r, "x - x")) == "0");
  CHECK(to_string(p(r, "x*x*y^2")) == "x^2*y^2");
  CHECK(to_string(poly_constant(r, r->field.from_int(-3))) == "-3");

  auto r7 = make_ring({"x", "y"}, Field::prime(7));
  // Residues print without signs.
  CHECK(to_string(p(r7, "x - y")) == "x + 6*y");
  CHECK(to_string(p(r7, "10*x")) == "3*x");
  CHECK(to_string(p(r7, "7*x + y")) == "y");
}

TEST_CASE("round trip parse(print(f)) == f") {
  auto r = make_ring({"x", "y", "z"}, Field::rationals());
  for (const char* text :
       {"x^2*y - z", "-3/4*x + y^5 - 1", "x*y*z + x*y + x + 1/9",
        "z^7 - 2*z", "5"}) {
    Polynomial f = p(r, text);
    CHECK(poly_equal(parse_polynomial(to_string(f), r), f));
  }
}

TEST_CASE("monic and comparisons") {
  auto r = qxy();
  CHECK(to_string(make_monic(p(r, "3*x^2 + 6*y"))) == "x^2 + 2*y");
  CHECK_THROWS_AS(make_monic(poly_zero(r)), DomainError);
  CHECK(compare_polynomials(p(r, "x"), p(r, "x^2")) < 0);
  CHECK(compare_polynomials(p(r, "x + 1"), p(r, "x")) > 0);
  CHECK(compare_polynomials(p(r, "x"), p(r, "x")) == 0);
}

TEST_CASE("mismatched rings are rejected") {
  auto r1 = qxy();
  auto r2 = make_ring({"a", "b"}, Field::rationals());
  CHECK_THROWS_AS(add(p(r1, "x"), p(r2, "a")), DomainError);
  // Structurally equal rings from different pointers work.
  auto r3 = make_ring({"x", "y"}, Field::rationals());
  CHECK(poly_equal(add(p(r1, "x"), p(r3, "y")), p(r1, "x + y")));
}
