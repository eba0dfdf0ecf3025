#include "smult/fpmodule.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "smult/error.hpp"

namespace smult {

void require_same_ring(const QuotientPtr& a, const QuotientPtr& b) {
  if (a == b) return;
  if (!a || !b || !same_ring(*a->base(), *b->base()) || a->relations() != b->relations())
    throw Error(ErrorKind::RingMismatch, "modules live over different rings");
}

FreeModule FreeModule::shifted(int delta) const {
  FreeModule out = *this;
  for (auto& s : out.shifts) s += delta;
  return out;
}

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows,
                            const std::vector<ModuleVector>& columns) {
  Matrix m(std::move(ring), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].rank() != rows) throw Error(ErrorKind::ArityMismatch, "column rank");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c].components[r];
  }
  return m;
}

ModuleVector Matrix::column(std::size_t c) const {
  ModuleVector v;
  v.components.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.components.push_back(at(r, c));
  return v;
}

std::vector<ModuleVector> Matrix::columns() const {
  std::vector<ModuleVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ArityMismatch, "matrix product shapes");
  Matrix out(a.ring_ ? a.ring_ : b.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
    }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

ModuleMap::ModuleMap(FreeModule source, FreeModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_.ring, target_.ring);
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw Error(ErrorKind::ArityMismatch, "matrix shape does not match free modules");
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
      Polynomial& e = matrix_.at(i, j);
      e = target_.ring->reduce(e);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != source_.shifts[j] - target_.shifts[i]) {
        std::ostringstream os;
        os << "entry (" << i << ',' << j << ") = " << e.to_string() << " is not of degree "
           << source_.shifts[j] - target_.shifts[i];
        throw Error(ErrorKind::NotGraded, os.str());
      }
    }
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!(inner.target_ == source_)) throw Error(ErrorKind::ArityMismatch, "maps do not compose");
  return ModuleMap(inner.source_, target_, matrix_ * inner.matrix_);
}

std::vector<int> vector_degrees(const std::vector<ModuleVector>& vectors,
                                std::span<const int> shifts, int fallback) {
  std::vector<int> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.is_zero()) {
      out.push_back(fallback);
      continue;
    }
    auto d = v.degree(shifts);
    if (!d) throw Error(ErrorKind::NotGraded, "inhomogeneous vector " + v.to_string());
    out.push_back(*d);
  }
  return out;
}

struct FPModule::Cache {
  std::once_flag gb_once;
  std::once_flag hs_once;
  GroebnerBasis gb;
  HilbertSeries hs;
};

FPModule::FPModule(ModuleMap presentation)
    : presentation_(std::move(presentation)), cache_(std::make_shared<Cache>()) {}

FPModule FPModule::free(const FreeModule& generators) {
  return FPModule(ModuleMap(FreeModule(generators.ring, {}), generators,
                            Matrix(generators.base(), generators.rank(), 0)));
}

FPModule FPModule::cyclic(const QuotientPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<ModuleVector> rels;
  for (const auto& f : ideal) rels.push_back(ModuleVector({f}));
  return from_relations(FreeModule(ring, {0}), rels);
}

FPModule FPModule::from_relations(const FreeModule& generators,
                                  const std::vector<ModuleVector>& relations) {
  std::vector<ModuleVector> kept;
  for (const auto& r : relations) {
    if (r.rank() != generators.rank()) throw Error(ErrorKind::ArityMismatch, "relation rank");
    ModuleVector v = r;
    for (auto& c : v.components) c = generators.ring->reduce(c);
    if (!v.is_zero()) kept.push_back(std::move(v));
  }
  FreeModule source(generators.ring, vector_degrees(kept, generators.shifts));
  return FPModule(ModuleMap(std::move(source), generators,
                            Matrix::from_columns(generators.base(), generators.rank(), kept)));
}

const GroebnerBasis& FPModule::basis() const {
  if (generators().rank() == 0)
    throw Error(ErrorKind::InvalidArgument, "no Groebner basis for a rank-0 module");
  std::call_once(cache_->gb_once, [this] {
    cache_->gb = buchberger(relations(), ring(), generators().shifts);
  });
  return cache_->gb;
}

const HilbertSeries& FPModule::hilbert_series() const {
  std::call_once(cache_->hs_once, [this] {
    auto weights = ring()->base()->weights();
    if (generators().rank() == 0) {
      cache_->hs = HilbertSeries(std::vector<int>(weights.begin(), weights.end()), 0, {});
    } else {
      cache_->hs = HilbertSeries::of_lead_terms(basis().lead_terms(), generators().shifts, weights);
    }
  });
  return cache_->hs;
}

long long hilbert_function(const FPModule& m, int degree) {
  return m.hilbert_series().value(degree);
}

HilbertData hilbert_data(const FPModule& m) {
  HilbertData out;
  const HilbertSeries& hs = m.hilbert_series();
  if (m.ring()->base()->standard_grading()) {
    auto [poly, stab] = hs.hilbert_polynomial();
    out.polynomial = std::move(poly);
    out.stabilization = stab;
  } else {
    int top = hs.offset() + static_cast<int>(hs.numerator().size());
    out.stabilization = top;
  }
  int lo = m.generators().shifts.empty()
               ? 0
               : *std::min_element(m.generators().shifts.begin(), m.generators().shifts.end());
  lo = std::min(lo, out.stabilization);
  for (int d = lo; d <= out.stabilization; ++d) out.values[d] = hs.value(d);
  return out;
}

long long length(const FPModule& m) {
  auto l = m.hilbert_series().length();
  if (!l) throw Error(ErrorKind::InfiniteLength, "module has positive Krull dimension");
  return *l;
}

int krull_dim(const FPModule& m) { return m.hilbert_series().dimension(); }

FPModule tensor(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& gm = m.generators().shifts;
  const auto& gn = n.generators().shifts;
  const std::size_t rm = gm.size(), rn = gn.size();
  const RingPtr& base = m.ring()->base();
  std::vector<int> shifts;
  for (std::size_t i = 0; i < rm; ++i)
    for (std::size_t j = 0; j < rn; ++j) shifts.push_back(gm[i] + gn[j]);
  std::vector<ModuleVector> rels;
  for (const auto& rho : m.relations())
    for (std::size_t j = 0; j < rn; ++j) {
      ModuleVector v = ModuleVector::zero(base, rm * rn);
      for (std::size_t i = 0; i < rm; ++i) v.components[i * rn + j] = rho.components[i];
      rels.push_back(std::move(v));
    }
  for (std::size_t i = 0; i < rm; ++i)
    for (const auto& sigma : n.relations()) {
      ModuleVector v = ModuleVector::zero(base, rm * rn);
      for (std::size_t j = 0; j < rn; ++j) v.components[i * rn + j] = sigma.components[j];
      rels.push_back(std::move(v));
    }
  return FPModule::from_relations(FreeModule(m.ring(), shifts), rels);
}

FPModule direct_sum(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring());
  const auto& gm = m.generators().shifts;
  const auto& gn = n.generators().shifts;
  const RingPtr& base = m.ring()->base();
  std::vector<int> shifts = gm;
  shifts.insert(shifts.end(), gn.begin(), gn.end());
  std::vector<ModuleVector> rels;
  for (const auto& rho : m.relations()) {
    ModuleVector v = ModuleVector::zero(base, shifts.size());
    for (std::size_t i = 0; i < gm.size(); ++i) v.components[i] = rho.components[i];
    rels.push_back(std::move(v));
  }
  for (const auto& sigma : n.relations()) {
    ModuleVector v = ModuleVector::zero(base, shifts.size());
    for (std::size_t j = 0; j < gn.size(); ++j) v.components[gm.size() + j] = sigma.components[j];
    rels.push_back(std::move(v));
  }
  return FPModule::from_relations(FreeModule(m.ring(), shifts), rels);
}

FPModule kernel(const ModuleMap& f) {
  const FreeModule& src = f.source();
  if (src.rank() == 0) return FPModule::free(FreeModule(f.ring(), {}));
  auto gens = syzygies(f.matrix().columns(), f.ring(), f.target().shifts, src.shifts);
  FreeModule kfree(f.ring(), vector_degrees(gens, src.shifts));
  if (gens.empty()) return FPModule::free(kfree);
  return FPModule::from_relations(kfree, syzygies(gens, f.ring(), src.shifts, kfree.shifts));
}

FPModule cokernel(const ModuleMap& f) { return FPModule(f); }

std::vector<ModuleVector> preimage_generators(const ModuleMap& f,
                                              const std::vector<ModuleVector>& target_relations) {
  const std::size_t s = f.source().rank();
  if (s == 0) return {};
  std::vector<ModuleVector> cols = f.matrix().columns();
  std::vector<int> src = f.source().shifts;
  auto rel_deg = vector_degrees(target_relations, f.target().shifts);
  for (std::size_t k = 0; k < target_relations.size(); ++k) {
    if (target_relations[k].is_zero()) continue;
    cols.push_back(target_relations[k]);
    src.push_back(rel_deg[k]);
  }
  if (f.target().rank() == 0) {
    std::vector<ModuleVector> units;
    for (std::size_t j = 0; j < s; ++j) units.push_back(ModuleVector::unit(f.source().base(), s, j));
    return units;
  }
  auto syz = syzygies(cols, f.ring(), f.target().shifts, src);
  std::vector<ModuleVector> proj;
  for (auto& z : syz) {
    z.components.resize(s);
    if (!z.is_zero()) proj.push_back(std::move(z));
  }
  return minimal_generators(proj, f.ring(), f.source().shifts);
}

FPModule subquotient(const FreeModule& ambient, const std::vector<ModuleVector>& gens,
                     const std::vector<ModuleVector>& rels) {
  std::vector<ModuleVector> k;
  for (const auto& g : gens)
    if (!g.is_zero()) k.push_back(g);
  FreeModule kfree(ambient.ring, vector_degrees(k, ambient.shifts));
  if (k.empty()) return FPModule::free(kfree);
  std::vector<ModuleVector> cols = k;
  std::vector<int> src = kfree.shifts;
  auto rel_deg = vector_degrees(rels, ambient.shifts);
  for (std::size_t j = 0; j < rels.size(); ++j) {
    if (rels[j].is_zero()) continue;
    cols.push_back(rels[j]);
    src.push_back(rel_deg[j]);
  }
  auto syz = syzygies(cols, ambient.ring, ambient.shifts, src);
  std::vector<ModuleVector> pres;
  for (auto& z : syz) {
    z.components.resize(k.size());
    if (!z.is_zero()) pres.push_back(std::move(z));
  }
  return FPModule::from_relations(kfree, pres);
}

HilbertSeries subquotient_series(const FreeModule& ambient, const std::vector<ModuleVector>& gens,
                                 const std::vector<ModuleVector>& rels) {
  auto weights = ambient.base()->weights();
  std::vector<int> w(weights.begin(), weights.end());
  if (ambient.rank() == 0) return HilbertSeries(w, 0, {});
  auto series = [&](const std::vector<ModuleVector>& vs) {
    return HilbertSeries::of_lead_terms(buchberger(vs, ambient.ring, ambient.shifts).lead_terms(),
                                        ambient.shifts, weights);
  };
  std::vector<ModuleVector> both = rels;
  both.insert(both.end(), gens.begin(), gens.end());
  return series(rels) - series(both);
}

}  // namespace smult
