#include "smult/homology.hpp"

#include <algorithm>

#include "smult/error.hpp"

namespace smult {

namespace {

ModuleMap tensor_map(const ModuleMap& d, const FreeModule& src, const FreeModule& tgt,
                     std::size_t rn) {
  const Matrix& m = d.matrix();
  Matrix out(m.ring(), tgt.rank(), src.rank());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      for (std::size_t k = 0; k < rn; ++k) out.at(r * rn + k, c * rn + k) = m.at(r, c);
    }
  return ModuleMap(src, tgt, std::move(out));
}

// F (x) N or Hom(F, N): N's relations repeated on every block of generators.
FPModule blockwise(const FreeModule& f, const FPModule& n, int sign) {
  const auto& gn = n.generators().shifts;
  const std::size_t rn = gn.size();
  std::vector<int> shifts;
  for (int s : f.shifts)
    for (int t : gn) shifts.push_back(t + sign * s);
  std::vector<ModuleVector> rels;
  const RingPtr& base = n.ring()->base();
  for (std::size_t g = 0; g < f.rank(); ++g)
    for (const auto& sigma : n.relations()) {
      ModuleVector v = ModuleVector::zero(base, f.rank() * rn);
      for (std::size_t k = 0; k < rn; ++k) v.components[g * rn + k] = sigma.components[k];
      rels.push_back(std::move(v));
    }
  return FPModule::from_relations(FreeModule(n.ring(), shifts), rels);
}

std::vector<ModuleVector> image_and_relations(const FPComplex& c, std::size_t i) {
  std::vector<ModuleVector> out = c.objects[i].relations();
  if (const ModuleMap* in = c.incoming(i)) {
    for (auto& col : in->matrix().columns())
      if (!col.is_zero()) out.push_back(std::move(col));
  }
  return out;
}

std::vector<ModuleVector> cycles(const FPComplex& c, std::size_t i) {
  const FPModule& x = c.objects[i];
  const std::size_t r = x.generators().rank();
  const ModuleMap* out = c.outgoing(i);
  std::size_t target = 0;
  if (out) target = out->target().rank();
  if (!out || target == 0) {
    std::vector<ModuleVector> units;
    for (std::size_t j = 0; j < r; ++j) units.push_back(ModuleVector::unit(x.ring()->base(), r, j));
    return units;
  }
  std::size_t tgt_index = c.direction == FPComplex::Direction::chain ? i - 1 : i + 1;
  return preimage_generators(*out, c.objects[tgt_index].relations());
}

TorProfile profile_of(const FPComplex& cx, const Resolution& res, std::size_t upto) {
  TorProfile p;
  p.resolution_length = res.complex.length();
  p.certificate = res.certificate;
  p.completeness = res.complete() ? Completeness::complete
                   : res.certificate ? Completeness::truncated_with_certificate
                                     : Completeness::truncated;
  for (std::size_t i = 0; i <= upto; ++i) {
    if (i > cx.length()) {
      p.lengths.push_back(0);
      continue;
    }
    auto l = homology_length(cx, i);
    if (!l) throw Error(ErrorKind::SerreConditionViolated, "homology of infinite length");
    p.lengths.push_back(*l);
  }
  return p;
}

std::size_t resolution_bound(const QuotientRing& ring, std::size_t upto) {
  return std::max(upto + 1, default_max_len(ring));
}

}  // namespace

const ModuleMap* FPComplex::outgoing(std::size_t i) const {
  if (direction == Direction::chain) return i >= 1 && i <= maps.size() ? &maps[i - 1] : nullptr;
  return i < maps.size() ? &maps[i] : nullptr;
}

const ModuleMap* FPComplex::incoming(std::size_t i) const {
  if (direction == Direction::chain) return i < maps.size() ? &maps[i] : nullptr;
  return i >= 1 && i <= maps.size() ? &maps[i - 1] : nullptr;
}

FPComplex tensor_with_module(const FreeComplex& c, const FPModule& n) {
  require_same_ring(c.ring(), n.ring());
  FPComplex out;
  for (const auto& f : c.modules) out.objects.push_back(blockwise(f, n, 1));
  const std::size_t rn = n.generators().rank();
  for (std::size_t i = 1; i <= c.length(); ++i)
    out.maps.push_back(tensor_map(c.d(i), out.objects[i].generators(),
                                  out.objects[i - 1].generators(), rn));
  return out;
}

FPComplex hom_into(const FreeComplex& c, const FPModule& n) {
  require_same_ring(c.ring(), n.ring());
  FPComplex out;
  out.direction = FPComplex::Direction::cochain;
  for (const auto& f : c.modules) out.objects.push_back(blockwise(f, n, -1));
  const std::size_t rn = n.generators().rank();
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const Matrix m = c.d(i).matrix().transpose();
    const FreeModule& src = out.objects[i - 1].generators();
    const FreeModule& tgt = out.objects[i].generators();
    Matrix big(m.ring(), tgt.rank(), src.rank());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (m.at(r, col).is_zero()) continue;
        for (std::size_t k = 0; k < rn; ++k) big.at(r * rn + k, col * rn + k) = m.at(r, col);
      }
    out.maps.emplace_back(src, tgt, std::move(big));
  }
  return out;
}

bool is_complex(const FPComplex& c) {
  for (std::size_t i = 0; i <= c.length(); ++i) {
    const ModuleMap* in = c.incoming(i);
    const ModuleMap* out = c.outgoing(i);
    if (!in || !out) continue;
    std::size_t tgt = c.direction == FPComplex::Direction::chain ? i - 1 : i + 1;
    const FPModule& target = c.objects[tgt];
    if (target.generators().rank() == 0) continue;
    Matrix prod = out->matrix() * in->matrix();
    for (const auto& col : prod.columns())
      if (!target.basis().contains(col)) return false;
  }
  return true;
}

FPModule homology_at(const FPComplex& c, std::size_t i) {
  if (i > c.length()) throw Error(ErrorKind::InvalidArgument, "homology index out of range");
  return subquotient(c.objects[i].generators(), cycles(c, i), image_and_relations(c, i));
}

HilbertSeries homology_series(const FPComplex& c, std::size_t i) {
  if (i > c.length()) throw Error(ErrorKind::InvalidArgument, "homology index out of range");
  const FreeModule& f = c.objects[i].generators();
  return subquotient_series(f, cycles(c, i), image_and_relations(c, i));
}

std::optional<long long> homology_length(const FPComplex& c, std::size_t i) {
  if (c.objects[i].generators().rank() == 0) return 0;
  return homology_series(c, i).length();
}

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::complete:
      return "complete";
    case Completeness::truncated_with_certificate:
      return "truncated_with_certificate";
    case Completeness::truncated:
      return "truncated";
  }
  return "?";
}

std::size_t default_tor_bound(const QuotientRing& ring) {
  return ring.is_polynomial_ring() ? ring.base()->nvars() : default_max_len(ring) - 1;
}

long long serre_length(const FPModule& m, const FPModule& n) {
  auto l = tensor(m, n).hilbert_series().length();
  if (!l) throw Error(ErrorKind::SerreConditionViolated, "M (x) N does not have finite length");
  return *l;
}

TorProfile tor(const FPModule& m, const FPModule& n, std::optional<std::size_t> upto) {
  serre_length(m, n);
  const QuotientRing& ring = *m.ring();
  const std::size_t bound = upto.value_or(default_tor_bound(ring));
  Resolution res = free_resolution(m, resolution_bound(ring, bound));
  return profile_of(tensor_with_module(res.complex, n), res, bound);
}

TorProfile ext(const FPModule& m, const FPModule& n, std::optional<std::size_t> upto) {
  serre_length(m, n);
  const QuotientRing& ring = *m.ring();
  const std::size_t bound = upto.value_or(default_tor_bound(ring));
  Resolution res = free_resolution(m, resolution_bound(ring, bound));
  return profile_of(hom_into(res.complex, n), res, bound);
}

}  // namespace smult
