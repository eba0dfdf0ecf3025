#include "smult/multiplicity.hpp"

#include <algorithm>

#include "smult/error.hpp"

namespace smult {

namespace {

bool has_zero_tail(const TorProfile& p) {
  if (p.complete()) return true;
  if (!p.certificate) return false;
  const std::size_t i0 = p.certificate->onset;
  if (p.lengths.size() < i0 + 2) return false;
  return p.lengths[i0] == 0 && p.lengths[i0 + 1] == 0;
}

long long factorial(std::size_t k) {
  long long f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long long>(i);
  return f;
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                 const QuotientRing& ring) {
  std::vector<Polynomial> out = ring.relations();
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return reduced_groebner_basis(out);
}

// M / J M for an ideal J given by generators.
FPModule quotient_by_ideal(const FPModule& m, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleVector> rels = m.relations();
  const RingPtr& base = m.ring()->base();
  const std::size_t r = m.generators().rank();
  for (const auto& g : ideal)
    for (std::size_t c = 0; c < r; ++c) {
      ModuleVector v = ModuleVector::zero(base, r);
      v.components[c] = g;
      rels.push_back(std::move(v));
    }
  return FPModule::from_relations(m.generators(), rels);
}

Polynomial embed(const Polynomial& f, const RingPtr& target, std::size_t offset) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<std::int32_t> e(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.arity(); ++i) e[offset + i] = t.mono[i];
    terms.push_back(Term{target->monomial(std::move(e)), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Verdict make(std::string name, bool applicable, bool ok, std::string detail = {}) {
  Verdict v;
  v.name = std::move(name);
  v.status = !applicable ? VerdictStatus::not_applicable : ok ? VerdictStatus::pass : VerdictStatus::fail;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

long long alternating_sum(const TorProfile& p) {
  long long s = 0;
  for (std::size_t i = 0; i < p.lengths.size(); ++i) s += (i % 2 ? -1 : 1) * p.lengths[i];
  return s;
}

std::vector<long long> chi_higher_all(const TorProfile& p) {
  std::vector<long long> out(p.lengths.size(), 0);
  long long acc = 0;
  for (std::size_t i = p.lengths.size(); i-- > 0;) {
    acc = p.lengths[i] - acc;
    out[i] = acc;
  }
  return out;
}

TorProfile euler_tor_profile(const FPModule& m, const FPModule& n) {
  TorProfile p = tor(m, n);
  if (has_zero_tail(p)) return p;
  if (!m.ring()->is_polynomial_ring()) {
    TorProfile q = tor(n, m);
    if (has_zero_tail(q)) return q;
  }
  throw Error(ErrorKind::Inconclusive,
              "neither side resolves to a complete or eventually zero Tor profile");
}

long long chi(const FPModule& m, const FPModule& n) { return alternating_sum(euler_tor_profile(m, n)); }

long long xi(const FPModule& m, const FPModule& n) {
  TorProfile p = ext(m, n);
  if (!has_zero_tail(p))
    throw Error(ErrorKind::Inconclusive, "Ext profile is neither complete nor eventually zero");
  return alternating_sum(p);
}

long long chi_higher(const FPModule& m, const FPModule& n, std::size_t i) {
  auto all = chi_higher_all(euler_tor_profile(m, n));
  return i < all.size() ? all[i] : 0;
}

SamuelData hilbert_samuel(const FPModule& m, const std::vector<Polynomial>& ideal,
                          std::optional<std::size_t> k) {
  for (const auto& f : ideal)
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotGraded, "ideal must be homogeneous");
  SamuelData out;
  out.ideal = ideal;
  const int dim = krull_dim(m);
  out.k = k.value_or(static_cast<std::size_t>(std::max(dim, 0)));
  const QuotientRing& ring = *m.ring();
  std::vector<Polynomial> base = products(ideal, {Polynomial::constant(ring.base(), 1)}, ring);
  std::vector<Polynomial> power = base;
  auto next_value = [&] {
    auto l = quotient_by_ideal(m, power).hilbert_series().length();
    if (!l) throw Error(ErrorKind::NotPrimary, "M / aM does not have finite length");
    out.values.push_back(*l);
    power = products(power, base, ring);
  };
  const std::size_t points = static_cast<std::size_t>(std::max(dim, 0)) + 1;
  constexpr std::size_t kVerify = 2;
  constexpr std::size_t kMaxPower = 32;
  for (std::size_t start = 1;; ++start) {
    while (out.values.size() < start - 1 + points + kVerify) {
      if (out.values.size() >= kMaxPower)
        throw Error(ErrorKind::Inconclusive, "Hilbert-Samuel function did not stabilize");
      next_value();
    }
    std::vector<std::pair<long, mpq_class>> pts;
    for (std::size_t j = 0; j < points; ++j) {
      long n = static_cast<long>(start + j);
      pts.emplace_back(n, mpq_class(static_cast<long>(out.values[n - 1])));
    }
    auto poly = interpolate(pts);
    bool ok = true;
    for (std::size_t j = points; j < points + kVerify; ++j) {
      long n = static_cast<long>(start + j);
      if (evaluate(poly, n) != mpq_class(static_cast<long>(out.values[n - 1]))) ok = false;
    }
    if (!ok) continue;
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    out.polynomial = poly;
    out.stabilization = static_cast<int>(start);
    break;
  }
  const std::size_t deg = out.polynomial.empty() ? 0 : out.polynomial.size() - 1;
  if (!out.polynomial.empty() && deg > out.k)
    throw Error(ErrorKind::InvalidArgument, "Hilbert-Samuel polynomial has degree above k");
  if (out.polynomial.empty() || deg < out.k) {
    out.e = 0;
  } else {
    mpq_class e = out.polynomial[deg] * mpq_class(static_cast<long>(factorial(out.k)));
    out.e = e.get_num().get_si();
  }
  return out;
}

long long koszul_euler(const std::vector<Polynomial>& seq, const FPModule& m) {
  if (!quotient_by_ideal(m, seq).hilbert_series().length())
    throw Error(ErrorKind::NotPrimary, "M / (seq) M does not have finite length");
  FPComplex c = tensor_with_module(koszul_complex(seq, m.ring()), m);
  long long s = 0;
  for (std::size_t i = 0; i <= c.length(); ++i) {
    auto l = homology_length(c, i);
    if (!l) throw Error(ErrorKind::NotPrimary, "Koszul homology of infinite length");
    s += (i % 2 ? -1 : 1) * *l;
  }
  return s;
}

long long theta(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring());
  if (!m.ring()->is_hypersurface())
    throw Error(ErrorKind::UnsupportedRing, "theta needs a hypersurface ring S/(f)");
  for (const FPModule* side : {&m, &n}) {
    const FPModule& other = side == &m ? n : m;
    Resolution r = free_resolution(*side);
    if (r.complete()) return 0;
    if (!r.certificate) continue;
    std::size_t even = r.certificate->onset + r.certificate->onset % 2;
    FPComplex c = tensor_with_module(r.complex, other);
    auto a = homology_length(c, even);
    auto b = homology_length(c, even + 1);
    if (!a || !b) throw Error(ErrorKind::Inconclusive, "periodic Tor of infinite length");
    return *a - *b;
  }
  throw Error(ErrorKind::Inconclusive, "no periodicity certificate on either side");
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass:
      return "pass";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::not_applicable:
      return "n/a";
  }
  return "?";
}

std::string to_string(IntersectionCase c) {
  switch (c) {
    case IntersectionCase::proper:
      return "proper";
    case IntersectionCase::deficient:
      return "deficient";
    case IntersectionCase::excess:
      return "excess";
  }
  return "?";
}

const Verdict* MultiplicityReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

bool MultiplicityReport::all_pass() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const Verdict& v) { return v.status == VerdictStatus::fail; });
}

bool is_cohen_macaulay(const FPModule& m) {
  if (!m.ring()->is_polynomial_ring())
    throw Error(ErrorKind::UnsupportedRing, "depth via projective dimension needs a polynomial ring");
  const int dim = krull_dim(m);
  if (dim < 0) return false;
  auto pd = projective_dimension(m);
  const int depth = static_cast<int>(m.ring()->base()->nvars()) - static_cast<int>(*pd.value);
  return depth == dim;
}

MultiplicityReport verify_serre_pair(const FPModule& m, const FPModule& n) {
  MultiplicityReport r;
  r.tensor_length = serre_length(m, n);
  const QuotientRing& ring = *m.ring();
  const bool regular = ring.is_polynomial_ring();
  r.dim_m = krull_dim(m);
  r.dim_n = krull_dim(n);
  r.dim_a = krull_dim(FPModule::free(FreeModule(m.ring(), {0})));
  const int sum = r.dim_m + r.dim_n;
  r.kind = sum == r.dim_a  ? IntersectionCase::proper
           : sum < r.dim_a ? IntersectionCase::deficient
                           : IntersectionCase::excess;
  r.tor = euler_tor_profile(m, n);
  r.chi = alternating_sum(r.tor);
  r.chi_higher = chi_higher_all(r.tor);
  try {
    TorProfile e = ext(m, n);
    r.ext_lengths = e.lengths;
    if (has_zero_tail(e)) r.xi = alternating_sum(e);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconclusive) throw;
  }
  if (regular) {
    r.cohen_macaulay_m = is_cohen_macaulay(m);
    r.cohen_macaulay_n = is_cohen_macaulay(n);
  }

  r.verdicts.push_back(make("dimension_inequality", regular || sum <= r.dim_a, sum <= r.dim_a,
                            std::to_string(r.dim_m) + " + " + std::to_string(r.dim_n) +
                                " <= " + std::to_string(r.dim_a)));
  const bool proper = r.kind == IntersectionCase::proper;
  r.verdicts.push_back(make("vanishing", regular && r.kind == IntersectionCase::deficient,
                            r.chi == 0, "chi = " + std::to_string(r.chi)));
  r.verdicts.push_back(make("positivity", regular && proper, r.chi > 0,
                            "chi = " + std::to_string(r.chi)));
  {
    bool applicable = regular && proper && r.cohen_macaulay_m && r.cohen_macaulay_n;
    bool higher_zero = std::all_of(r.tor.lengths.begin() + 1, r.tor.lengths.end(),
                                   [](long long l) { return l == 0; });
    r.verdicts.push_back(make("cm_fast_path", applicable,
                              higher_zero && r.chi == r.tensor_length && r.chi > 0,
                              "l(M (x) N) = " + std::to_string(r.tensor_length)));
  }
  {
    bool ok = r.xi && r.chi == (r.dim_n % 2 ? -*r.xi : *r.xi);
    r.verdicts.push_back(make("euler_form", regular && r.xi.has_value(), ok,
                              r.xi ? "xi = " + std::to_string(*r.xi) : std::string("xi unavailable")));
  }
  {
    bool ok = true;
    for (std::size_t i = 1; i < r.chi_higher.size(); ++i) {
      if (r.chi_higher[i] < 0) ok = false;
      if (r.tor.lengths[i] != 0 && r.chi_higher[i] <= 0) ok = false;
    }
    bool tor_higher = std::any_of(r.tor.lengths.begin() + 1, r.tor.lengths.end(),
                                  [](long long l) { return l != 0; });
    r.verdicts.push_back(make("higher_euler", regular, ok,
                              tor_higher ? "higher Tor nonzero" : "higher Tor zero"));
  }
  return r;
}

DiagonalReport diagonal_reduction_check(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring());
  const QuotientRing& a = *m.ring();
  if (!a.is_polynomial_ring())
    throw Error(ErrorKind::UnsupportedRing, "reduction to the diagonal needs a polynomial ring");
  DiagonalReport out;
  out.a_side = tor(m, n);

  const RingPtr& s = a.base();
  const std::size_t nv = s->nvars();
  std::vector<std::string> vars = s->variables();
  for (const auto& v : s->variables()) vars.push_back(v + "'");
  std::vector<int> weights(s->weights().begin(), s->weights().end());
  weights.insert(weights.end(), s->weights().begin(), s->weights().end());
  RingPtr b = RingSpec::make(s->field(), vars, s->order(), weights);
  QuotientPtr bq = QuotientRing::make(b);

  const auto& gm = m.generators().shifts;
  const auto& gn = n.generators().shifts;
  const std::size_t rm = gm.size(), rn = gn.size();
  std::vector<int> shifts;
  for (int x : gm)
    for (int y : gn) shifts.push_back(x + y);
  std::vector<ModuleVector> rels;
  for (const auto& rho : m.relations())
    for (std::size_t j = 0; j < rn; ++j) {
      ModuleVector v = ModuleVector::zero(b, rm * rn);
      for (std::size_t i = 0; i < rm; ++i) v.components[i * rn + j] = embed(rho.components[i], b, 0);
      rels.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < rm; ++i)
    for (const auto& sigma : n.relations()) {
      ModuleVector v = ModuleVector::zero(b, rm * rn);
      for (std::size_t j = 0; j < rn; ++j) v.components[i * rn + j] = embed(sigma.components[j], b, nv);
      rels.push_back(std::move(v));
    }
  FPModule external = FPModule::from_relations(FreeModule(bq, shifts), rels);
  std::vector<Polynomial> diag;
  for (std::size_t i = 0; i < nv; ++i)
    diag.push_back(Polynomial::variable(b, i) - Polynomial::variable(b, nv + i));
  FPModule diagonal = FPModule::cyclic(bq, diag);
  out.b_side = tor(diagonal, external, out.a_side.lengths.size() - 1);
  out.agree = out.a_side.lengths == out.b_side.lengths;
  return out;
}

}  // namespace smult
