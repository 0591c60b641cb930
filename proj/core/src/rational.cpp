#include "cca/rational.hpp"

#include <cctype>

#include "cca/errors.hpp"

namespace cca {

Int binomial(const Int& n, unsigned long k) {
  Int result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal", 0);
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  bool seen_slash = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] == '/') {
      if (seen_slash || j + 1 == text.size() || j == i)
        throw ParseError("malformed rational literal", j);
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("unexpected character in rational literal", j);
  }
  if (i == text.size()) throw ParseError("malformed rational literal", 0);
  Rational r;
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  if (r.set_str(body, 10) != 0)
    throw ParseError("malformed rational literal", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator", text.find('/'));
  r.canonicalize();
  return r;
}

}  // namespace cca
