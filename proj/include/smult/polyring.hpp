#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smult/exactnum.hpp"

namespace smult {

enum class OrderKind { grevlex, lex, weighted_grevlex };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  /// True when the order refines (weighted) total degree.
  bool degree_compatible() const { return kind != OrderKind::lex; }
  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Exponent vector with its weighted degree cached.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<std::int32_t> exponents, std::span<const int> weights);

  std::span<const std::int32_t> exponents() const { return exps_; }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  std::size_t arity() const { return exps_.size(); }
  /// Weighted total degree.
  int degree() const { return degree_; }
  /// Unweighted total degree.
  int total_degree() const;
  bool is_one() const { return degree_ == 0 && total_degree() == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::int32_t> exps_;
  int degree_ = 0;
};

/// -1, 0, 1 as u <, =, > v. Throws ArityMismatch on different variable counts.
int compare(const Monomial& u, const Monomial& v, const MonomialOrder& order);

class RingSpec {
 public:
  static std::shared_ptr<const RingSpec> make(FieldSpec field, std::vector<std::string> variables,
                                              MonomialOrder order = {},
                                              std::vector<int> weights = {});

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const int> weights() const { return weights_; }
  std::size_t nvars() const { return variables_.size(); }
  bool standard_grading() const;

  int compare(const Monomial& u, const Monomial& v) const { return smult::compare(u, v, order_); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const;
  Monomial variable(std::size_t i) const;
  Monomial monomial(std::vector<std::int32_t> exponents) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingSpec() = default;

  FieldSpec field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

bool same_ring(const RingSpec& a, const RingSpec& b);

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Terms strictly descending in the ring order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines arbitrary terms.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElement& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }

  bool is_homogeneous() const;
  /// Weighted degree of the leading term's homogeneous component; only
  /// meaningful for homogeneous polynomials. Zero for the zero polynomial.
  int degree() const;
  /// Maximum weighted degree over all terms.
  int max_degree() const;
  /// A nonzero constant.
  bool is_unit() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses `3*x^2*y - 1/2*z` style text; also accepts parentheses and
/// integer powers of subexpressions.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Base ring modulo an ideal, the relations kept as a reduced Groebner basis.
class QuotientRing {
 public:
  static std::shared_ptr<const QuotientRing> make(RingPtr base,
                                                  std::vector<Polynomial> relations = {});

  const RingPtr& base() const { return base_; }
  const FieldSpec& field() const { return base_->field(); }
  const std::vector<Polynomial>& relations() const { return relations_; }
  bool is_polynomial_ring() const { return relations_.empty(); }
  bool homogeneous() const { return homogeneous_; }
  /// Relations are generated by a single polynomial.
  bool is_hypersurface() const { return relations_.size() == 1; }

  /// Unique normal form modulo the relations.
  Polynomial reduce(const Polynomial& f) const;

  std::string to_string() const;

 private:
  QuotientRing() = default;

  RingPtr base_;
  std::vector<Polynomial> relations_;
  bool homogeneous_ = true;
};

using QuotientPtr = std::shared_ptr<const QuotientRing>;

Polynomial reduce_mod(const Polynomial& f, const QuotientRing& ring);

}  // namespace smult
