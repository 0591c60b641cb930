#include "cca/parse.hpp"

#include <cctype>
#include <string>

#include "cca/errors.hpp"

namespace cca {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool at_digit() const {
    return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
  }
  bool at_ident() const {
    return !eof() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                      peek() == '_');
  }

  Int natural() {
    const std::size_t start = pos;
    std::string digits;
    while (at_digit()) digits += text[pos++];
    if (digits.empty()) throw ParseError("expected a number", start);
    return Int(digits);
  }

  std::string identifier() {
    std::string name;
    name += text[pos++];
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_'))
      name += text[pos++];
    return name;
  }
};

int exponent_value(const Int& e, std::size_t at) {
  if (e > kMaxExponent)
    throw ParseError("exponent exceeds the cap " + std::to_string(kMaxExponent),
                     at);
  return static_cast<int>(e.get_si());
}

// variable ('^' natural)?
void parse_factor(Cursor& c, const RingPtr& ring, Exponent& mono) {
  const std::size_t at = c.pos;
  const std::string name = c.identifier();
  const auto index = ring->var_index(name);
  if (!index) throw ParseError("unknown variable '" + name + "'", at);
  int e = 1;
  c.skip_ws();
  if (!c.eof() && c.peek() == '^') {
    ++c.pos;
    c.skip_ws();
    const std::size_t eat = c.pos;
    e = exponent_value(c.natural(), eat);
  }
  if (mono[*index] > kMaxExponent - e)
    throw ParseError("exponent exceeds the cap " + std::to_string(kMaxExponent),
                     at);
  mono[*index] += e;
}

// coefficient ('*' factor)* | factor ('*' factor)*
Term parse_term(Cursor& c, const RingPtr& ring, bool negative) {
  Rational coeff(1);
  Exponent mono(ring->nvars(), 0);
  bool saw_unit = false;

  if (c.at_digit()) {
    Int num = c.natural();
    Int den(1);
    c.skip_ws();
    if (!c.eof() && c.peek() == '/') {
      ++c.pos;
      c.skip_ws();
      const std::size_t dat = c.pos;
      den = c.natural();
      if (den == 0) throw ParseError("zero denominator", dat);
    }
    coeff = Rational(num, den);
    coeff.canonicalize();
    saw_unit = true;
  } else if (c.at_ident()) {
    parse_factor(c, ring, mono);
    saw_unit = true;
  }
  if (!saw_unit) throw ParseError("expected a term", c.pos);

  for (;;) {
    c.skip_ws();
    if (c.eof() || c.peek() != '*') break;
    ++c.pos;
    c.skip_ws();
    if (!c.at_ident())
      throw ParseError("expected a variable after '*'", c.pos);
    parse_factor(c, ring, mono);
  }

  if (negative) coeff = -coeff;
  return Term{ring->field.from_rational(coeff), std::move(mono)};
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Cursor c{text};
  std::vector<Term> terms;
  c.skip_ws();
  if (c.eof()) throw ParseError("empty polynomial", c.pos);

  bool negative = false;
  if (c.peek() == '+' || c.peek() == '-') {
    negative = c.peek() == '-';
    ++c.pos;
    c.skip_ws();
  }
  for (;;) {
    terms.push_back(parse_term(c, ring, negative));
    c.skip_ws();
    if (c.eof()) break;
    if (c.peek() != '+' && c.peek() != '-')
      throw ParseError("expected '+' or '-'", c.pos);
    negative = c.peek() == '-';
    ++c.pos;
    c.skip_ws();
  }
  return make_polynomial(ring, std::move(terms));
}

}  // namespace cca
