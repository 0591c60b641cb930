#include <doctest.h>

#include "cca/errors.hpp"
#include "cca/parse.hpp"

using namespace cca;

namespace {

RingPtr ring3() { return make_ring({"x", "y", "z"}, Field::rationals()); }

std::size_t error_position(const char* text) {
  try {
    parse_polynomial(text, ring3());
  } catch (const ParseError& e) {
    return e.position;
  }
  FAIL((std::string("expected a parse error for: ") + text));
  return std::size_t(-1);
}

}  // namespace

TEST_CASE("accepted inputs") {
  auto r = ring3();
  CHECK(to_string(parse_polynomial("x^2", r)) == "x^2");
  CHECK(to_string(parse_polynomial("  x * y  ", r)) == "x*y");
  CHECK(to_string(parse_polynomial("3/6*x + 2*y - z", r)) ==
        "1/2*x + 2*y - z");
  CHECK(to_string(parse_polynomial("-x^2*y^3", r)) == "-x^2*y^3");
  CHECK(to_string(parse_polynomial("+4", r)) == "4");
  CHECK(to_string(parse_polynomial("x ^ 2 * y", r)) == "x^2*y");
  CHECK(to_string(parse_polynomial("2*x*x", r)) == "2*x^2");
  CHECK(to_string(parse_polynomial("123456789012345678901234567890", r)) ==
        "123456789012345678901234567890");
}

TEST_CASE("rejected inputs carry positions") {
  CHECK(error_position("") == 0);
  CHECK(error_position("x^2y") == 3);     // missing '*'
  CHECK(error_position("2x") == 1);       // missing '*'
  CHECK(error_position("x + w") == 4);    // unknown variable
  CHECK(error_position("x^") == 2);       // missing exponent
  CHECK(error_position("1/0*x") == 2);    // zero denominator
  CHECK(error_position("x *") == 3);      // dangling star
  CHECK(error_position("x + ") == 4);     // dangling sign
  CHECK(error_position("(x)") == 0);      // parentheses unsupported
  CHECK(error_position("x^9999999999") == 2);  // exponent cap
}

TEST_CASE("unknown variable names the offender") {
  try {
    parse_polynomial("x + foo^2", ring3());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
    CHECK(e.position == 4);
  }
}

TEST_CASE("prime field coefficients reduce") {
  auto r = make_ring({"x"}, Field::prime(101));
  CHECK(to_string(parse_polynomial("102*x", r)) == "x");
  CHECK(to_string(parse_polynomial("1/2*x", r)) == "51*x");
  CHECK_THROWS_AS(parse_polynomial("1/101*x", r), DomainError);
}
