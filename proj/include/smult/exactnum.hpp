#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "smult/error.hpp"

namespace smult {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  static constexpr std::uint32_t kDefaultPrime = 32003;

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return kind_ == Kind::rationals; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), characteristic_(p) {}

  Kind kind_ = Kind::rationals;
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec in canonical form: a reduced fraction with
/// positive denominator over Q, or a residue in [0, p) over F_p.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(const FieldSpec& field) : field_(field) {}
  FieldElement(const FieldSpec& field, long value);
  FieldElement(const FieldSpec& field, const mpz_class& value);

  static FieldElement zero(const FieldSpec& field) { return FieldElement(field); }
  static FieldElement one(const FieldSpec& field) { return FieldElement(field, 1L); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over Q.
  const mpq_class& rational() const { return q_; }
  /// Valid only over F_p.
  std::uint32_t residue() const { return r_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Over F_p the residue is printed in the symmetric range (-p/2, p/2].
  std::string to_string() const;

  /// Sign of the printed representation: -1, 0 or 1.
  int display_sign() const;

 private:
  friend FieldElement canonicalize(const mpz_class&, const mpz_class&, const FieldSpec&);

  void check_same_field(const FieldElement& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Multiplicative inverse; throws DivisionByZero for a = 0.
FieldElement field_inverse(const FieldElement& a);

/// Builds numerator/denominator in canonical form. Throws DivisionByZero
/// for a zero denominator and NonInvertibleDenominator when p divides it.
FieldElement canonicalize(const mpz_class& numerator, const mpz_class& denominator,
                          const FieldSpec& field);

}  // namespace smult
