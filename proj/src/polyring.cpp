#include "smult/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "poly_parse.hpp"
#include "smult/groebner.hpp"

namespace smult {

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::weighted_grevlex: return "wgrevlex";
  }
  return "grevlex";
}

Monomial::Monomial(std::vector<std::int32_t> exponents, std::span<const int> weights)
    : exps_(std::move(exponents)) {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i] * (i < weights.size() ? weights[i] : 1);
  }
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = a.exps_[i] - b.exps_[i];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  std::vector<std::int32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e), weights);
}

int compare(const Monomial& u, const Monomial& v, const MonomialOrder& order) {
  if (u.arity() != v.arity()) {
    throw Error(ErrorKind::ArityMismatch, "monomials over different variable counts");
  }
  const auto a = u.exponents();
  const auto b = v.exponents();
  switch (order.kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::grevlex:
    case OrderKind::weighted_grevlex: {
      const int du = order.kind == OrderKind::grevlex ? u.total_degree() : u.degree();
      const int dv = order.kind == OrderKind::grevlex ? v.total_degree() : v.degree();
      if (du != dv) return du > dv ? 1 : -1;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

RingPtr RingSpec::make(FieldSpec field, std::vector<std::string> variables, MonomialOrder order,
                       std::vector<int> weights) {
  if (variables.empty()) throw Error(ErrorKind::InvalidArgument, "ring needs a variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + v + "'");
    }
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) {
    throw Error(ErrorKind::ArityMismatch, "one weight per variable required");
  }
  for (int w : weights) {
    if (w <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  }
  auto ring = std::shared_ptr<RingSpec>(new RingSpec());
  ring->field_ = field;
  ring->variables_ = std::move(variables);
  ring->order_ = order;
  ring->weights_ = std::move(weights);
  return ring;
}

bool RingSpec::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial RingSpec::one() const {
  return Monomial(std::vector<std::int32_t>(nvars(), 0), weights_);
}

Monomial RingSpec::variable(std::size_t i) const {
  std::vector<std::int32_t> e(nvars(), 0);
  e.at(i) = 1;
  return Monomial(std::move(e), weights_);
}

Monomial RingSpec::monomial(std::vector<std::int32_t> exponents) const {
  if (exponents.size() != nvars()) throw Error(ErrorKind::ArityMismatch, "exponent count");
  return Monomial(std::move(exponents), weights_);
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  return a.field_ == b.field_ && a.variables_ == b.variables_ && a.order_ == b.order_ &&
         a.weights_ == b.weights_;
}

bool same_ring(const RingSpec& a, const RingSpec& b) { return &a == &b || a == b; }

// ---------------------------------------------------------------------------

namespace {

// Sorted-merge of two descending term lists, a + sign*b.
std::vector<Term> merge_terms(const RingSpec& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = ring.compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      FieldElement s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const RingSpec& r = *ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return monomial(ring, ring->one(), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  FieldElement e(ring->field(), c);
  return constant(std::move(ring), e);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  Monomial m = ring->variable(i);
  return monomial(ring, m, FieldElement::one(ring->field()));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

int Polynomial::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_ || !same_ring(*ring_, *other.ring_)) {
    throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(*ring_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  terms_ = merge_terms(*ring_, terms_, other.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  for (const auto& t : small.terms_) {
    out.terms_ = merge_terms(*a.ring_, out.terms_, big.times_term(t.mono, t.coeff).terms_, false);
  }
  return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono, t.coeff * c});
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{t.mono * m, t.coeff * c});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead().coeff.is_one()) return *this;
  return scaled(field_inverse(lead().coeff));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ && b.ring_ && !same_ring(*a.ring_, *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const int sign = t.coeff.display_sign();
    FieldElement mag = sign < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (sign < 0) os << "-";
    } else {
      os << (sign < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!mag.is_one() || t.mono.is_one()) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_->variables()[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace detail {
namespace {

Polynomial parse_sum(TokenStream& in, const RingPtr& ring);

Polynomial parse_primary(TokenStream& in, const RingPtr& ring) {
  const Token& t = in.peek();
  if (t.kind == TokKind::integer) {
    Token tok = in.next();
    return Polynomial::constant(ring, FieldElement(ring->field(), mpz_class(tok.text)));
  }
  if (t.kind == TokKind::ident) {
    auto idx = ring->index_of(t.text);
    if (!idx) in.fail("unknown variable '" + t.text + "'");
    in.next();
    return Polynomial::variable(ring, *idx);
  }
  if (in.accept_punct('(')) {
    Polynomial p = parse_sum(in, ring);
    in.expect_punct(')');
    return p;
  }
  in.fail("expected a polynomial");
}

Polynomial parse_power(TokenStream& in, const RingPtr& ring) {
  Polynomial base = parse_primary(in, ring);
  if (in.accept_punct('^')) {
    if (in.peek().kind != TokKind::integer) in.fail("expected integer exponent");
    Token tok = in.next();
    const unsigned long e = std::stoul(tok.text);
    Polynomial acc = Polynomial::constant(ring, 1);
    for (unsigned long k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }
  return base;
}

Polynomial parse_unary(TokenStream& in, const RingPtr& ring) {
  if (in.accept_punct('-')) return -parse_unary(in, ring);
  if (in.accept_punct('+')) return parse_unary(in, ring);
  return parse_power(in, ring);
}

Polynomial parse_product(TokenStream& in, const RingPtr& ring) {
  Polynomial acc = parse_unary(in, ring);
  for (;;) {
    if (in.accept_punct('*')) {
      acc = acc * parse_unary(in, ring);
    } else if (in.is_punct('/')) {
      Token slash = in.next();
      Polynomial d = parse_unary(in, ring);
      if (!d.is_unit()) TokenStream::fail_at(slash, "division only by nonzero constants");
      acc = acc.scaled(field_inverse(d.lead().coeff));
    } else {
      return acc;
    }
  }
}

Polynomial parse_sum(TokenStream& in, const RingPtr& ring) {
  Polynomial acc = parse_product(in, ring);
  for (;;) {
    if (in.accept_punct('+')) {
      acc += parse_product(in, ring);
    } else if (in.accept_punct('-')) {
      acc -= parse_product(in, ring);
    } else {
      return acc;
    }
  }
}

}  // namespace

Polynomial parse_poly_expr(TokenStream& in, const RingPtr& ring) { return parse_sum(in, ring); }

}  // namespace detail

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  detail::TokenStream in(detail::tokenize(text));
  Polynomial p = detail::parse_poly_expr(in, ring);
  if (!in.at_end()) in.fail("trailing input after polynomial");
  return p;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const QuotientRing> QuotientRing::make(RingPtr base,
                                                       std::vector<Polynomial> relations) {
  auto q = std::shared_ptr<QuotientRing>(new QuotientRing());
  q->base_ = base;
  std::vector<Polynomial> nonzero;
  for (auto& r : relations) {
    if (!r.ring() || !same_ring(*r.ring(), *base)) {
      throw Error(ErrorKind::RingMismatch, "relation not in the base ring");
    }
    if (!r.is_zero()) nonzero.push_back(std::move(r));
  }
  if (!nonzero.empty()) q->relations_ = reduced_groebner_basis(nonzero);
  for (const auto& r : q->relations_) {
    if (!r.is_homogeneous()) q->homogeneous_ = false;
  }
  return q;
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (relations_.empty() || f.is_zero()) return f;
  // Full division by the reduced basis: the remainder is the unique normal form.
  const RingPtr& ring = base_;
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lead = rest.lead();
    const Polynomial* divisor = nullptr;
    for (const auto& g : relations_) {
      if (g.lead().mono.divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      rest -= divisor->times_term(lead.mono / divisor->lead().mono,
                                  lead.coeff / divisor->lead().coeff);
    } else {
      remainder.push_back(lead);
      rest -= Polynomial::monomial(ring, lead.mono, lead.coeff);
    }
  }
  return Polynomial(ring, std::move(remainder));
}

std::string QuotientRing::to_string() const {
  std::ostringstream os;
  os << base_->field().to_string() << "[";
  for (std::size_t i = 0; i < base_->nvars(); ++i) {
    os << (i ? "," : "") << base_->variables()[i];
  }
  os << "]";
  if (!relations_.empty()) {
    os << "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      os << (i ? ", " : "") << relations_[i].to_string();
    }
    os << ")";
  }
  return os.str();
}

Polynomial reduce_mod(const Polynomial& f, const QuotientRing& ring) { return ring.reduce(f); }

}  // namespace smult
