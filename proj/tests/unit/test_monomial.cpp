#include <doctest.h>

#include <algorithm>

#include "cca/errors.hpp"
#include "cca/monomial.hpp"

using namespace cca;

TEST_CASE("grevlex order") {
  MonomialOrder o{OrderKind::grevlex, 0};
  // x^2 vs x*y in 2 vars: equal degree, last differing coordinate decides,
  // smaller exponent there wins.
  CHECK(compare(o, {2, 0}, {1, 1}) > 0);
  CHECK(compare(o, {1, 1}, {0, 2}) > 0);
  CHECK(compare(o, {0, 3}, {2, 0}) > 0);  // higher total degree
  CHECK(compare(o, {1, 2}, {1, 2}) == 0);
  // Classic grevlex distinction in 3 vars: x*z vs y^2.
  CHECK(compare(o, {1, 0, 1}, {0, 2, 0}) < 0);
}

TEST_CASE("lex order") {
  MonomialOrder o{OrderKind::lex, 0};
  CHECK(compare(o, {1, 0, 0}, {0, 5, 7}) > 0);
  CHECK(compare(o, {1, 1, 0}, {1, 0, 9}) > 0);
}

TEST_CASE("block elimination order") {
  MonomialOrder o{OrderKind::block, 1};
  // Any power of the first variable dominates everything without it.
  CHECK(compare(o, {1, 0, 0}, {0, 9, 9}) > 0);
  CHECK(compare(o, {0, 2, 1}, {0, 1, 1}) > 0);
  // Ties in the first block fall through to the second block.
  CHECK(compare(o, {1, 0, 2}, {1, 2, 0}) < 0);
}

TEST_CASE("exponent helpers") {
  CHECK(divides({1, 0}, {2, 3}));
  CHECK_FALSE(divides({1, 4}, {2, 3}));
  CHECK(exp_lcm({1, 4}, {2, 3}) == Exponent{2, 4});
  CHECK(exp_add({1, 4}, {2, 3}) == Exponent{3, 7});
  CHECK(exp_sub({2, 3}, {1, 0}) == Exponent{1, 3});
  CHECK(exp_sub_clamped({1, 4}, {2, 3}) == Exponent{0, 1});
  CHECK(exp_coprime({1, 0}, {0, 2}));
  CHECK_FALSE(exp_coprime({1, 1}, {0, 2}));
}

TEST_CASE("minimal antichain") {
  std::vector<Exponent> gens = {{2, 0}, {1, 1}, {2, 1}, {0, 2}, {1, 1}, {3, 3}};
  auto min = minimal_antichain(gens);
  CHECK(min.size() == 3);
  CHECK(std::find(min.begin(), min.end(), Exponent{2, 0}) != min.end());
  CHECK(std::find(min.begin(), min.end(), Exponent{1, 1}) != min.end());
  CHECK(std::find(min.begin(), min.end(), Exponent{0, 2}) != min.end());
  // Canonical order: grevlex descending.
  MonomialOrder o{};
  for (std::size_t i = 0; i + 1 < min.size(); ++i)
    CHECK(compare(o, min[i], min[i + 1]) > 0);
}

TEST_CASE("standard monomial count") {
  // (x, y, z)^4 leaves the 20 monomials of degree at most 3.
  std::vector<Exponent> pow4;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 4; ++b) pow4.push_back({a, b, 4 - a - b});
  CHECK(count_standard_monomials(minimal_antichain(pow4), 3) == 20);

  CHECK(count_standard_monomials({{2, 0}, {0, 3}}, 2) == 6);
  CHECK(count_standard_monomials({{1, 0}, {0, 1}}, 2) == 1);
  CHECK_THROWS_AS(count_standard_monomials({{1, 0}}, 2), NotArtinianError);
  // Unit ideal: nothing survives.
  CHECK(count_standard_monomials({{0, 0}}, 2) == 0);
}
