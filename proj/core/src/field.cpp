#include "cca/field.hpp"

#include <cstdlib>

#include "cca/errors.hpp"

namespace cca {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the bases 2, 3, 5, 7 decide primality for
// everything below 3.2e9, which covers the allowed modulus range.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 invmod(u64 a, u64 p) {
  if (a == 0) throw DomainError("division by zero in F_p");
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

const Rational& as_q(const FieldElement& a) { return std::get<Rational>(a); }
u64 as_r(const FieldElement& a) { return std::get<u64>(a); }

}  // namespace

Field Field::rationals() { return Field{}; }

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p >= (1ull << 31) || !is_prime_u64(p))
    throw DomainError("field modulus must be an odd prime below 2^31");
  Field f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

FieldElement Field::zero() const {
  if (kind_ == FieldKind::rationals) return Rational(0);
  return u64{0};
}

FieldElement Field::one() const {
  if (kind_ == FieldKind::rationals) return Rational(1);
  return u64{1};
}

FieldElement Field::from_int(const Int& n) const {
  if (kind_ == FieldKind::rationals) return Rational(n);
  return mpz_fdiv_ui(n.get_mpz_t(), p_);
}

FieldElement Field::from_int(long n) const { return from_int(Int(n)); }

FieldElement Field::from_rational(const Rational& r) const {
  if (kind_ == FieldKind::rationals) return r;
  u64 den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p_);
  if (den == 0)
    throw DomainError("denominator not invertible mod " + std::to_string(p_));
  u64 num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p_);
  return mulmod(num, invmod(den, p_), p_);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (kind_ == FieldKind::rationals) return Rational(as_q(a) + as_q(b));
  u64 s = as_r(a) + as_r(b);
  return s >= p_ ? s - p_ : s;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (kind_ == FieldKind::rationals) return Rational(as_q(a) - as_q(b));
  u64 x = as_r(a), y = as_r(b);
  return x >= y ? x - y : x + p_ - y;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (kind_ == FieldKind::rationals) return Rational(as_q(a) * as_q(b));
  return mulmod(as_r(a), as_r(b), p_);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::neg(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) return Rational(-as_q(a));
  u64 x = as_r(a);
  return x == 0 ? x : p_ - x;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) {
    if (as_q(a) == 0) throw DomainError("division by zero");
    return Rational(1 / as_q(a));
  }
  return invmod(as_r(a), p_);
}

bool Field::is_zero(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) return as_q(a) == 0;
  return as_r(a) == 0;
}

bool Field::is_one(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) return as_q(a) == 1;
  return as_r(a) == 1;
}

bool Field::equal(const FieldElement& a, const FieldElement& b) const {
  if (kind_ == FieldKind::rationals) return as_q(a) == as_q(b);
  return as_r(a) == as_r(b);
}

bool Field::is_negative(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) return as_q(a) < 0;
  return false;
}

std::string Field::to_string(const FieldElement& a) const {
  if (kind_ == FieldKind::rationals) return as_q(a).get_str();
  return std::to_string(as_r(a));
}

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "fp:" + std::to_string(p_);
}

Field field_from_name(const std::string& name) {
  if (name == "Q" || name == "q") return Field::rationals();
  if (name.rfind("fp:", 0) == 0) {
    const std::string digits = name.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed field name: " + name);
    return Field::prime(std::strtoull(digits.c_str(), nullptr, 10));
  }
  throw DomainError("unknown field: " + name + " (expected Q or fp:<p>)");
}

}  // namespace cca
