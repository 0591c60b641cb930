#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "cca/rational.hpp"

namespace cca {

enum class FieldKind { rationals, prime };

// A coefficient. The active alternative must match the field it belongs
// to: Rational for Q, a residue in [0, p) for F_p.
using FieldElement = std::variant<Rational, std::uint64_t>;

// Coefficient field context. All element operations go through the field
// so that the same polynomial code serves Q and F_p.
class Field {
 public:
  static Field rationals();
  // p must be an odd prime below 2^31. Throws DomainError otherwise.
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(const Int& n) const;
  FieldElement from_int(long n) const;
  // For F_p the denominator must be invertible mod p. Throws DomainError.
  FieldElement from_rational(const Rational& r) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;

  bool is_zero(const FieldElement& a) const;
  bool is_one(const FieldElement& a) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;

  // True for rationals below zero. Residues are never negative; used only
  // to pick printed signs.
  bool is_negative(const FieldElement& a) const;

  std::string to_string(const FieldElement& a) const;
  std::string name() const;  // "Q" or "fp:<p>"

  bool operator==(const Field& other) const {
    return kind_ == other.kind_ && p_ == other.p_;
  }

 private:
  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t p_ = 0;
};

// Parses a field name: "Q", "q", or "fp:<p>". Throws DomainError.
Field field_from_name(const std::string& name);

}  // namespace cca
