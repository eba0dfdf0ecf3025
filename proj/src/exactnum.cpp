#include "smult/exactnum.hpp"

#include <ostream>
#include <sstream>

namespace smult {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::ResourceLimitExceeded: return "ResourceLimitExceeded";
    case ErrorKind::InfiniteLength: return "InfiniteLength";
    case ErrorKind::NotAResolution: return "NotAResolution";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::SerreConditionViolated: return "SerreConditionViolated";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Configuration: return "Configuration";
  }
  return "Unknown";
}

namespace {
thread_local Limits tls_limits;
}

const Limits& current_limits() { return tls_limits; }

ScopedLimits::ScopedLimits(const Limits& limits) : saved_(tls_limits) { tls_limits = limits; }
ScopedLimits::~ScopedLimits() { tls_limits = saved_; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidField,
                "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::prime_field, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (is_rational()) return "QQ";
  return "GF(" + std::to_string(characteristic_) + ")";
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

// Extended Euclid; a must be nonzero mod p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldElement::FieldElement(const FieldSpec& field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce_mpz(mpz_class(value), field_.characteristic());
  }
}

FieldElement::FieldElement(const FieldSpec& field, const mpz_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce_mpz(value, field_.characteristic());
  }
}

bool FieldElement::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool FieldElement::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void FieldElement::check_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::RingMismatch, "field mismatch: " + field_.to_string() + " vs " +
                                             other.field_.to_string());
  }
}

FieldElement FieldElement::operator-() const {
  FieldElement out(field_);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    std::uint64_t s = std::uint64_t{r_} + other.r_;
    if (s >= field_.characteristic()) s -= field_.characteristic();
    r_ = static_cast<std::uint32_t>(s);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ *= other.q_;
  } else {
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * other.r_) % field_.characteristic());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  check_same_field(other);
  return *this *= field_inverse(other);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

int FieldElement::display_sign() const {
  if (field_.is_rational()) return sgn(q_);
  if (r_ == 0) return 0;
  return r_ > field_.characteristic() / 2 ? -1 : 1;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  if (display_sign() < 0) {
    return "-" + std::to_string(field_.characteristic() - r_);
  }
  return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

FieldElement field_inverse(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElement out(a.field());
  if (a.field().is_rational()) {
    out = canonicalize(a.rational().get_den(), a.rational().get_num(), a.field());
  } else {
    out = canonicalize(mpz_class(inverse_mod(a.residue(), a.field().characteristic())), 1,
                       a.field());
  }
  return out;
}

FieldElement canonicalize(const mpz_class& numerator, const mpz_class& denominator,
                          const FieldSpec& field) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  FieldElement out(field);
  if (field.is_rational()) {
    out.q_ = mpq_class(numerator, denominator);
    out.q_.canonicalize();
    return out;
  }
  const std::uint32_t p = field.characteristic();
  std::uint32_t den = reduce_mpz(denominator, p);
  if (den == 0) {
    throw Error(ErrorKind::NonInvertibleDenominator,
                "denominator " + denominator.get_str() + " is divisible by " + std::to_string(p));
  }
  std::uint32_t num = reduce_mpz(numerator, p);
  out.r_ = static_cast<std::uint32_t>((std::uint64_t{num} * inverse_mod(den, p)) % p);
  return out;
}

}  // namespace smult
