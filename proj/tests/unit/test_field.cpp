#include <doctest.h>

#include "cca/errors.hpp"
#include "cca/field.hpp"

using namespace cca;

TEST_CASE("rational field arithmetic") {
  Field k = Field::rationals();
  FieldElement a = k.from_rational(rational_from_string("2/3"));
  FieldElement b = k.from_rational(rational_from_string("-1/6"));
  CHECK(k.to_string(k.add(a, b)) == "1/2");
  CHECK(k.to_string(k.mul(a, b)) == "-1/9");
  CHECK(k.to_string(k.div(a, b)) == "-4");
  CHECK(k.is_zero(k.sub(a, a)));
  CHECK(k.is_negative(b));
  CHECK_FALSE(k.is_negative(a));
  CHECK_THROWS_AS(k.inv(k.zero()), DomainError);
}

TEST_CASE("rational literals") {
  CHECK(to_string(rational_from_string("4/2")) == "2");
  CHECK(to_string(rational_from_string("-6/4")) == "-3/2");
  CHECK(to_string(rational_from_string("+7")) == "7");
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("a/2"), ParseError);
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), ParseError);
}

TEST_CASE("prime field arithmetic") {
  Field k = Field::prime(7);
  FieldElement a = k.from_int(Int(10));  // 3
  FieldElement b = k.from_int(Int(-1));  // 6
  CHECK(k.to_string(a) == "3");
  CHECK(k.to_string(b) == "6");
  CHECK(k.to_string(k.add(a, b)) == "2");
  CHECK(k.to_string(k.mul(a, b)) == "4");
  CHECK(k.to_string(k.inv(a)) == "5");  // 3*5 = 15 = 1 mod 7
  CHECK(k.to_string(k.from_rational(rational_from_string("1/3"))) == "5");
  CHECK_THROWS_AS(k.from_rational(rational_from_string("1/7")), DomainError);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(Field::prime(6), DomainError);
  CHECK_THROWS_AS(Field::prime(2), DomainError);
  CHECK_THROWS_AS(Field::prime(1ull << 31), DomainError);
  CHECK(Field::prime(2147483647).modulus() == 2147483647ull);
  CHECK(field_from_name("Q").kind() == FieldKind::rationals);
  CHECK(field_from_name("fp:101").modulus() == 101);
  CHECK_THROWS_AS(field_from_name("fp:abc"), DomainError);
  CHECK_THROWS_AS(field_from_name("R"), DomainError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(Int(6), 3) == 20);
  CHECK(binomial(Int(5), 0) == 1);
  CHECK(binomial(Int(2), 5) == 0);
  CHECK(binomial(Int(-1), 2) == 1);   // (-1)(-2)/2
  CHECK(binomial(Int(-2), 3) == -4);  // (-2)(-3)(-4)/6
}
