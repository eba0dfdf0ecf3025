#include "smult/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace smult {

// --- ModuleVector ----------------------------------------------------------

ModuleVector ModuleVector::zero(const RingPtr& ring, std::size_t rank) {
  return ModuleVector(std::vector<Polynomial>(rank, Polynomial::zero(ring)));
}

ModuleVector ModuleVector::unit(const RingPtr& ring, std::size_t rank, std::size_t i) {
  ModuleVector v = zero(ring, rank);
  v.components.at(i) = Polynomial::constant(ring, 1);
  return v;
}

bool ModuleVector::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> ModuleVector::degree(std::span<const int> shifts) const {
  std::optional<int> deg;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Polynomial& p = components[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    const int d = p.degree() + (i < shifts.size() ? shifts[i] : 0);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

bool ModuleVector::is_homogeneous(std::span<const int> shifts) const {
  return is_zero() || degree(shifts).has_value();
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  if (other.rank() != rank()) throw Error(ErrorKind::ArityMismatch, "module vector ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) components[i] += other.components[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  if (other.rank() != rank()) throw Error(ErrorKind::ArityMismatch, "module vector ranks differ");
  for (std::size_t i = 0; i < rank(); ++i) components[i] -= other.components[i];
  return *this;
}

ModuleVector ModuleVector::scaled(const Polynomial& f) const {
  ModuleVector out = *this;
  for (auto& c : out.components) c = c * f;
  return out;
}

std::string ModuleVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    os << (i ? ", " : "") << components[i].to_string();
  }
  os << ")";
  return os.str();
}

// --- ModuleOrder -----------------------------------------------------------

ModuleOrder::ModuleOrder(RingPtr ring, std::vector<int> shifts, std::vector<int> blocks)
    : ring_(std::move(ring)), shifts_(std::move(shifts)), blocks_(std::move(blocks)) {
  if (!blocks_.empty() && blocks_.size() != shifts_.size()) {
    throw Error(ErrorKind::ArityMismatch, "one block index per component required");
  }
}

int ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                         std::uint32_t cb) const {
  if (!blocks_.empty() && blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? 1 : -1;
  if (ring_->order().degree_compatible()) {
    const int da = a.degree() + shifts_[ca];
    const int db = b.degree() + shifts_[cb];
    if (da != db) return da > db ? 1 : -1;
  }
  if (int c = ring_->compare(a, b); c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

// --- sparse engine ---------------------------------------------------------

namespace detail {

struct VTerm {
  Monomial mono;
  std::uint32_t comp;
  FieldElement coeff;
};
using SVec = std::vector<VTerm>;

struct GbData {
  QuotientPtr ring;
  ModuleOrder order;
  std::vector<SVec> elems;
  std::uint64_t steps = 0;
};

}  // namespace detail

namespace {

using detail::SVec;
using detail::VTerm;

SVec to_svec(const ModuleVector& v, const ModuleOrder& ord) {
  SVec out;
  for (std::uint32_t c = 0; c < v.components.size(); ++c) {
    for (const auto& t : v.components[c].terms()) out.push_back(VTerm{t.mono, c, t.coeff});
  }
  std::sort(out.begin(), out.end(), [&](const VTerm& a, const VTerm& b) {
    return ord.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return out;
}

ModuleVector from_svec(const SVec& s, const RingPtr& ring, std::size_t rank,
                       std::uint32_t offset = 0) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : s) parts.at(t.comp - offset).push_back(Term{t.mono, t.coeff});
  ModuleVector v;
  v.components.reserve(rank);
  for (auto& p : parts) v.components.emplace_back(ring, std::move(p));
  return v;
}

int term_degree(const VTerm& t, const ModuleOrder& ord) {
  return t.mono.degree() + ord.shifts()[t.comp];
}

int sugar_of(const SVec& s, const ModuleOrder& ord) {
  int d = 0;
  for (const auto& t : s) d = std::max(d, term_degree(t, ord));
  return d;
}

class Reducer {
 public:
  Reducer(const ModuleOrder& ord, std::uint64_t max_steps) : ord_(ord), max_steps_(max_steps) {}

  std::uint64_t steps() const { return steps_; }

  // f[fi..] - c * m * g[gi..]
  SVec sub_mul(const SVec& f, std::size_t fi, const SVec& g, std::size_t gi,
               const FieldElement& c, const Monomial& m) const {
    SVec out;
    out.reserve(f.size() - fi + g.size() - gi);
    while (fi < f.size() || gi < g.size()) {
      if (gi == g.size()) {
        out.push_back(f[fi++]);
        continue;
      }
      Monomial gm = g[gi].mono * m;
      int cmp = fi == f.size() ? -1 : ord_.compare(f[fi].mono, f[fi].comp, gm, g[gi].comp);
      if (cmp > 0) {
        out.push_back(f[fi++]);
      } else if (cmp < 0) {
        out.push_back(VTerm{std::move(gm), g[gi].comp, -(g[gi].coeff * c)});
        ++gi;
      } else {
        FieldElement s = f[fi].coeff - g[gi].coeff * c;
        if (!s.is_zero()) out.push_back(VTerm{f[fi].mono, f[fi].comp, std::move(s)});
        ++fi;
        ++gi;
      }
    }
    return out;
  }

  const SVec* find_divisor(const VTerm& t, const std::vector<SVec>& basis,
                           std::size_t skip = static_cast<std::size_t>(-1)) const {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const VTerm& lead = basis[k].front();
      if (lead.comp == t.comp && lead.mono.divides(t.mono)) return &basis[k];
    }
    return nullptr;
  }

  // Full reduction; the result has no term divisible by a basis lead term.
  SVec reduce(SVec f, const std::vector<SVec>& basis,
              std::size_t skip = static_cast<std::size_t>(-1)) {
    SVec rem;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const VTerm& t = f[pos];
      const SVec* g = find_divisor(t, basis, skip);
      if (!g) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      const VTerm& lead = g->front();
      f = sub_mul(f, pos + 1, *g, 1, t.coeff / lead.coeff, t.mono / lead.mono);
      pos = 0;
      tick();
    }
    return rem;
  }

  void tick() {
    if (++steps_ > max_steps_) {
      throw Error(ErrorKind::ResourceLimitExceeded,
                  "Groebner step cap of " + std::to_string(max_steps_) + " reductions exceeded");
    }
  }

 private:
  const ModuleOrder& ord_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
};

void make_monic(SVec& s) {
  if (s.empty() || s.front().coeff.is_one()) return;
  FieldElement inv = field_inverse(s.front().coeff);
  for (auto& t : s) t.coeff *= inv;
}

std::vector<SVec> relation_multiples(std::span<const Polynomial> relations,
                                     const ModuleOrder& ord) {
  std::vector<SVec> out;
  for (std::uint32_t c = 0; c < ord.rank(); ++c) {
    for (const auto& r : relations) {
      SVec s;
      for (const auto& t : r.terms()) s.push_back(VTerm{t.mono, c, t.coeff});
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  int sugar;
  std::uint64_t seq;
};

struct GbOutput {
  std::vector<SVec> elems;
  std::uint64_t steps;
};

GbOutput compute_gb(std::vector<SVec> inputs, const ModuleOrder& ord, std::uint64_t max_steps) {
  Reducer red(ord, max_steps);
  std::vector<SVec> basis;
  std::vector<int> sugar;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Pair> pairs;
  std::uint64_t seq = 0;
  const bool ideal_case = ord.rank() == 1;
  std::span<const int> weights = ord.ring()->weights();

  struct Input {
    std::size_t index;
    int sugar;
    std::uint64_t seq;
  };
  std::vector<Input> queue_inputs;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].empty()) continue;
    queue_inputs.push_back(Input{k, sugar_of(inputs[k], ord), seq++});
  }

  auto add_element = [&](SVec h, int s) {
    make_monic(h);
    const std::size_t n = basis.size();
    for (std::size_t k = 0; k < n; ++k) {
      const VTerm& a = basis[k].front();
      const VTerm& b = h.front();
      if (a.comp != b.comp) continue;
      if (ideal_case && a.mono.coprime(b.mono)) continue;
      Monomial l = Monomial::lcm(a.mono, b.mono, weights);
      int ps = std::max(sugar[k] + l.degree() - a.mono.degree(), s + l.degree() - b.mono.degree());
      pairs.push_back(Pair{k, n, ps, seq++});
      pending.insert({k, n});
    }
    basis.push_back(std::move(h));
    sugar.push_back(s);
  };

  auto chain_criterion = [&](const Pair& p) {
    const VTerm& a = basis[p.i].front();
    const VTerm& b = basis[p.j].front();
    Monomial l = Monomial::lcm(a.mono, b.mono, weights);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const VTerm& c = basis[k].front();
      if (c.comp != a.comp || !c.mono.divides(l)) continue;
      auto key = [](std::size_t x, std::size_t y) {
        return std::make_pair(std::min(x, y), std::max(x, y));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) return true;
    }
    return false;
  };

  while (!pairs.empty() || !queue_inputs.empty()) {
    // Lowest sugar first; inputs before pairs of equal sugar; FIFO otherwise.
    std::optional<std::size_t> best_pair;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (!best_pair || pairs[k].sugar < pairs[*best_pair].sugar ||
          (pairs[k].sugar == pairs[*best_pair].sugar && pairs[k].seq < pairs[*best_pair].seq)) {
        best_pair = k;
      }
    }
    std::optional<std::size_t> best_input;
    for (std::size_t k = 0; k < queue_inputs.size(); ++k) {
      if (!best_input || queue_inputs[k].sugar < queue_inputs[*best_input].sugar ||
          (queue_inputs[k].sugar == queue_inputs[*best_input].sugar &&
           queue_inputs[k].seq < queue_inputs[*best_input].seq)) {
        best_input = k;
      }
    }
    if (best_input &&
        (!best_pair || queue_inputs[*best_input].sugar <= pairs[*best_pair].sugar)) {
      Input in = queue_inputs[*best_input];
      queue_inputs.erase(queue_inputs.begin() + static_cast<std::ptrdiff_t>(*best_input));
      SVec h = red.reduce(std::move(inputs[in.index]), basis);
      if (!h.empty()) add_element(std::move(h), in.sugar);
      continue;
    }
    Pair p = pairs[*best_pair];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(*best_pair));
    if (chain_criterion(p)) {
      pending.erase({p.i, p.j});
      continue;
    }
    pending.erase({p.i, p.j});
    const SVec& f = basis[p.i];
    const SVec& g = basis[p.j];
    Monomial l = Monomial::lcm(f.front().mono, g.front().mono, weights);
    SVec fi;
    Monomial mf = l / f.front().mono;
    fi.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) {
      fi.push_back(VTerm{f[k].mono * mf, f[k].comp, f[k].coeff});
    }
    SVec s = red.sub_mul(fi, 0, g, 1, FieldElement::one(f.front().coeff.field()),
                         l / g.front().mono);
    red.tick();
    SVec h = red.reduce(std::move(s), basis);
    if (!h.empty()) add_element(std::move(h), p.sugar);
  }

  // Minimalize, then tail-reduce.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k) continue;
      const VTerm& a = basis[m].front();
      const VTerm& b = basis[k].front();
      if (a.comp != b.comp || !a.mono.divides(b.mono)) continue;
      if (!(a.mono == b.mono) || m < k) redundant = true;
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<SVec> minimal;
  for (std::size_t k : keep) minimal.push_back(std::move(basis[k]));
  std::vector<SVec> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    SVec tail(minimal[k].begin() + 1, minimal[k].end());
    SVec rt = red.reduce(std::move(tail), minimal, k);
    SVec full;
    full.reserve(rt.size() + 1);
    full.push_back(minimal[k].front());
    for (auto& t : rt) full.push_back(std::move(t));
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const SVec& a, const SVec& b) {
    return ord.compare(a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
  });
  return GbOutput{std::move(reduced), red.steps()};
}

std::vector<SVec> lift_inputs(const std::vector<ModuleVector>& gens, const QuotientRing& ring,
                              const ModuleOrder& ord) {
  std::vector<SVec> inputs;
  for (const auto& g : gens) {
    if (g.rank() != ord.rank()) throw Error(ErrorKind::ArityMismatch, "generator rank mismatch");
    for (const auto& c : g.components) {
      if (!c.ring() || !same_ring(*c.ring(), *ring.base())) {
        throw Error(ErrorKind::RingMismatch, "generator not over the module's ring");
      }
    }
    inputs.push_back(to_svec(g, ord));
  }
  for (auto& r : relation_multiples(ring.relations(), ord)) inputs.push_back(std::move(r));
  return inputs;
}

}  // namespace

// --- GroebnerBasis ---------------------------------------------------------

GroebnerBasis::GroebnerBasis() = default;
GroebnerBasis::~GroebnerBasis() = default;
GroebnerBasis::GroebnerBasis(const GroebnerBasis&) = default;
GroebnerBasis& GroebnerBasis::operator=(const GroebnerBasis&) = default;
GroebnerBasis::GroebnerBasis(GroebnerBasis&&) noexcept = default;
GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis&&) noexcept = default;

const QuotientPtr& GroebnerBasis::ring() const { return data_->ring; }
const ModuleOrder& GroebnerBasis::order() const { return data_->order; }
std::size_t GroebnerBasis::size() const { return data_->elems.size(); }
std::uint64_t GroebnerBasis::steps() const { return data_->steps; }

std::vector<ModuleVector> GroebnerBasis::generators() const {
  std::vector<ModuleVector> out;
  for (const auto& e : data_->elems) {
    out.push_back(from_svec(e, data_->ring->base(), data_->order.rank()));
  }
  return out;
}

std::vector<LeadTerm> GroebnerBasis::lead_terms() const {
  std::vector<LeadTerm> out;
  for (const auto& e : data_->elems) out.push_back(LeadTerm{e.front().mono, e.front().comp});
  return out;
}

ModuleVector GroebnerBasis::normal_form(const ModuleVector& v) const {
  if (v.rank() != data_->order.rank()) {
    throw Error(ErrorKind::ArityMismatch, "vector rank does not match the basis");
  }
  Reducer red(data_->order, current_limits().max_steps);
  SVec r = red.reduce(to_svec(v, data_->order), data_->elems);
  return from_svec(r, data_->ring->base(), data_->order.rank());
}

std::optional<ModuleVector> GroebnerBasis::s_vector(std::size_t i, std::size_t j) const {
  const SVec& f = data_->elems.at(i);
  const SVec& g = data_->elems.at(j);
  if (f.front().comp != g.front().comp) return std::nullopt;
  const ModuleOrder& ord = data_->order;
  Monomial l = Monomial::lcm(f.front().mono, g.front().mono, ord.ring()->weights());
  Reducer red(ord, current_limits().max_steps);
  SVec fi;
  Monomial mf = l / f.front().mono;
  for (const auto& t : f) fi.push_back(VTerm{t.mono * mf, t.comp, t.coeff});
  SVec s = red.sub_mul(fi, 0, g, 0, fi.front().coeff / g.front().coeff, l / g.front().mono);
  return from_svec(s, data_->ring->base(), ord.rank());
}

GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, const QuotientPtr& ring,
                         std::vector<int> shifts, std::vector<int> blocks) {
  std::size_t rank = shifts.size();
  if (rank == 0) rank = generators.empty() ? 1 : generators.front().rank();
  if (shifts.empty()) shifts.assign(rank, 0);
  ModuleOrder ord(ring->base(), std::move(shifts), std::move(blocks));
  GbOutput out = compute_gb(lift_inputs(generators, *ring, ord), ord, current_limits().max_steps);
  GroebnerBasis gb;
  gb.data_ = std::make_shared<detail::GbData>(
      detail::GbData{ring, std::move(ord), std::move(out.elems), out.steps});
  return gb;
}

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& basis) {
  return basis.normal_form(v);
}

std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& ideal) {
  if (ideal.empty()) return {};
  const RingPtr& ring = ideal.front().ring();
  ModuleOrder ord(ring, {0});
  std::vector<SVec> inputs;
  for (const auto& f : ideal) inputs.push_back(to_svec(ModuleVector({f}), ord));
  GbOutput out = compute_gb(std::move(inputs), ord, current_limits().max_steps);
  std::vector<Polynomial> result;
  for (const auto& e : out.elems) result.push_back(from_svec(e, ring, 1).components[0]);
  return result;
}

std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& vectors,
                                   const QuotientPtr& ring, std::vector<int> target_shifts,
                                   std::vector<int> source_shifts) {
  const std::size_t r = vectors.size();
  if (r == 0) return {};
  const std::size_t m = vectors.front().rank();
  if (target_shifts.empty()) target_shifts.assign(m, 0);
  if (target_shifts.size() != m) throw Error(ErrorKind::ArityMismatch, "target shift count");
  bool graded = true;
  if (source_shifts.empty()) {
    for (const auto& v : vectors) {
      auto d = v.degree(target_shifts);
      if (!d && !v.is_zero()) graded = false;
      source_shifts.push_back(d.value_or(0));
    }
  } else {
    for (std::size_t j = 0; j < r; ++j) {
      auto d = vectors[j].degree(target_shifts);
      if (!vectors[j].is_zero() && (!d || *d != source_shifts[j])) graded = false;
    }
  }
  if (source_shifts.size() != r) throw Error(ErrorKind::ArityMismatch, "source shift count");

  // Elimination: GB of (v_j, e_j) in S^m (+) S^r with the S^m block larger.
  std::vector<int> shifts = target_shifts;
  shifts.insert(shifts.end(), source_shifts.begin(), source_shifts.end());
  std::vector<int> blocks(m, 0);
  blocks.insert(blocks.end(), r, 1);
  ModuleOrder ord(ring->base(), shifts, blocks);
  const RingPtr& base = ring->base();
  std::vector<ModuleVector> augmented;
  for (std::size_t j = 0; j < r; ++j) {
    if (vectors[j].rank() != m) throw Error(ErrorKind::ArityMismatch, "vector ranks differ");
    ModuleVector a = ModuleVector::zero(base, m + r);
    for (std::size_t c = 0; c < m; ++c) a.components[c] = vectors[j].components[c];
    a.components[m + j] = Polynomial::constant(base, 1);
    augmented.push_back(std::move(a));
  }
  GbOutput out = compute_gb(lift_inputs(augmented, *ring, ord), ord, current_limits().max_steps);
  std::vector<ModuleVector> syz;
  for (const auto& e : out.elems) {
    if (e.front().comp < m) continue;
    ModuleVector v = from_svec(e, base, r, static_cast<std::uint32_t>(m));
    for (auto& c : v.components) c = ring->reduce(c);
    if (!v.is_zero()) syz.push_back(std::move(v));
  }
  if (!graded) return syz;
  return minimal_generators(syz, ring, source_shifts);
}

std::vector<ModuleVector> minimal_generators(const std::vector<ModuleVector>& vectors,
                                             const QuotientPtr& ring, std::vector<int> shifts) {
  struct Candidate {
    int degree;
    std::size_t index;
  };
  std::vector<Candidate> cands;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].is_zero()) continue;
    auto d = vectors[k].degree(shifts);
    if (!d) throw Error(ErrorKind::NotGraded, "minimal generators need homogeneous vectors");
    cands.push_back(Candidate{*d, k});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  if (cands.empty()) return {};
  ModuleOrder ord(ring->base(), shifts);
  const auto relations = relation_multiples(ring->relations(), ord);
  std::vector<SVec> picked;
  std::vector<ModuleVector> result;
  Reducer red(ord, current_limits().max_steps);
  std::size_t k = 0;
  while (k < cands.size()) {
    const int deg = cands[k].degree;
    std::vector<SVec> inputs = picked;
    inputs.insert(inputs.end(), relations.begin(), relations.end());
    std::vector<SVec> basis = compute_gb(std::move(inputs), ord, current_limits().max_steps).elems;
    // Echelon rows of this degree, keyed by leading term.
    std::vector<SVec> echelon;
    for (; k < cands.size() && cands[k].degree == deg; ++k) {
      const ModuleVector& v = vectors[cands[k].index];
      SVec nf = red.reduce(to_svec(v, ord), basis);
      bool progress = true;
      while (!nf.empty() && progress) {
        progress = false;
        for (const auto& row : echelon) {
          if (row.front().comp == nf.front().comp && row.front().mono == nf.front().mono) {
            nf = red.sub_mul(nf, 1, row, 1, nf.front().coeff, ord.ring()->one());
            progress = true;
            break;
          }
        }
      }
      if (nf.empty()) continue;
      make_monic(nf);
      echelon.push_back(std::move(nf));
      picked.push_back(to_svec(v, ord));
      result.push_back(v);
    }
  }
  return result;
}

}  // namespace smult
