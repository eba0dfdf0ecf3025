#include "smult/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "smult/error.hpp"

namespace smult {

namespace {

struct Entry {
  std::size_t row;
  std::size_t col;
};

std::optional<Entry> find_unit(const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.at(r, c).is_unit()) return Entry{r, c};
  return std::nullopt;
}

Matrix drop_row(const Matrix& m, std::size_t row) {
  Matrix out(m.ring(), m.rows() - 1, m.cols());
  for (std::size_t r = 0, o = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(o, c) = m.at(r, c);
    ++o;
  }
  return out;
}

Matrix drop_col(const Matrix& m, std::size_t col) {
  Matrix out(m.ring(), m.rows(), m.cols() - 1);
  for (std::size_t c = 0, o = 0; c < m.cols(); ++c) {
    if (c == col) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) out.at(r, o) = m.at(r, c);
    ++o;
  }
  return out;
}

// delta - gamma a^-1 beta, with row e.row and column e.col removed.
Matrix cancel(const Matrix& m, Entry e, const QuotientRing& ring) {
  const Polynomial& a = m.at(e.row, e.col);
  FieldElement ainv = field_inverse(a.lead().coeff);
  Matrix out(m.ring(), m.rows() - 1, m.cols() - 1);
  for (std::size_t r = 0, orow = 0; r < m.rows(); ++r) {
    if (r == e.row) continue;
    const Polynomial gamma = m.at(r, e.col).scaled(ainv);
    for (std::size_t c = 0, ocol = 0; c < m.cols(); ++c) {
      if (c == e.col) continue;
      Polynomial v = m.at(r, c);
      if (!gamma.is_zero() && !m.at(e.row, c).is_zero()) v -= gamma * m.at(e.row, c);
      out.at(orow, ocol++) = ring.reduce(v);
    }
    ++orow;
  }
  return out;
}

std::optional<int> uniform_shift(const FreeModule& later, const FreeModule& earlier) {
  if (later.rank() != earlier.rank() || later.rank() == 0) return std::nullopt;
  int delta = later.shifts[0] - earlier.shifts[0];
  for (std::size_t k = 1; k < later.rank(); ++k)
    if (later.shifts[k] - earlier.shifts[k] != delta) return std::nullopt;
  return delta;
}

bool contained_in(const std::vector<ModuleVector>& vs, const std::vector<ModuleVector>& gens,
                  const QuotientPtr& ring, const std::vector<int>& shifts) {
  if (vs.empty()) return true;
  GroebnerBasis gb = buchberger(gens, ring, shifts);
  for (const auto& v : vs)
    if (!gb.contains(v)) return false;
  return true;
}

bool vanishes_mod(const Matrix& m, const QuotientRing& ring) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!ring.reduce(m.at(r, c)).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::size_t> BettiTable::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& s : shifts) out.push_back(s.size());
  return out;
}

std::string BettiTable::to_string() const {
  std::map<int, std::vector<std::size_t>> rows;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (int s : shifts[i]) {
      auto& row = rows[s - static_cast<int>(i)];
      row.resize(shifts.size());
      ++row[i];
    }
  std::ostringstream os;
  os << "       ";
  for (std::size_t i = 0; i < shifts.size(); ++i) os << ' ' << i;
  os << "\ntotal:";
  for (auto r : ranks()) os << ' ' << r;
  for (auto& [j, row] : rows) {
    row.resize(shifts.size());
    os << '\n';
    std::string label = std::to_string(j) + ":";
    os << std::string(label.size() < 6 ? 6 - label.size() : 0, ' ') << label;
    for (auto v : row) os << ' ' << (v ? std::to_string(v) : std::string("."));
  }
  return os.str();
}

BettiTable betti_table(const FreeComplex& c) {
  BettiTable t;
  for (const auto& f : c.modules) {
    auto s = f.shifts;
    std::sort(s.begin(), s.end());
    t.shifts.push_back(std::move(s));
  }
  return t;
}

std::size_t default_max_len(const QuotientRing& ring) {
  std::size_t n = ring.base()->nvars();
  return ring.is_polynomial_ring() ? n : n + 8;
}

Resolution free_resolution(const FPModule& m, std::optional<std::size_t> max_len) {
  const QuotientPtr& ring = m.ring();
  const std::size_t limit = max_len.value_or(default_max_len(*ring));
  FreeModule f0 = m.generators();
  Matrix pres = m.presentation().matrix();
  while (auto e = find_unit(pres)) {
    pres = cancel(pres, *e, *ring);
    f0.shifts.erase(f0.shifts.begin() + static_cast<std::ptrdiff_t>(e->row));
  }
  Resolution res;
  FreeComplex& cx = res.complex;
  cx.modules.push_back(f0);
  if (f0.rank() == 0) return res;
  std::vector<ModuleVector> current =
      pres.cols() == 0 ? std::vector<ModuleVector>{}
                       : minimal_generators(pres.columns(), ring, f0.shifts);
  bool periodic = false;
  for (std::size_t k = 1;; ++k) {
    if (current.empty()) return res;
    if (k > limit) {
      cx.truncated = true;
      break;
    }
    const FreeModule& prev = cx.modules[k - 1];
    FreeModule fk(ring, vector_degrees(current, prev.shifts));
    cx.maps.emplace_back(fk, prev, Matrix::from_columns(ring->base(), prev.rank(), current));
    cx.modules.push_back(fk);
    if (periodic) {
      // d_{k+1} := d_{k-1}: ker d_k = ker d_{k-2} = im d_{k-1}.
      current = cx.d(k - 1).matrix().columns();
      continue;
    }
    std::vector<ModuleVector> next = syzygies(current, ring, prev.shifts, fk.shifts);
    if (!ring->is_polynomial_ring() && k >= 2 && !next.empty()) {
      const ModuleMap& back = cx.d(k - 1);
      auto delta = uniform_shift(fk, cx.modules[k - 2]);
      if (delta && back.source().rank() == next.size() &&
          vanishes_mod(cx.d(k).matrix() * back.matrix(), *ring)) {
        auto cand = back.matrix().columns();
        if (contained_in(next, cand, ring, fk.shifts)) {
          next = std::move(cand);
          periodic = true;
        }
      }
    }
    current = std::move(next);
  }
  res.certificate = detect_periodicity(cx);
  return res;
}

FreeComplex minimalize(const FreeComplex& c) {
  const std::size_t len = c.length();
  if (!is_complex(c)) throw Error(ErrorKind::NotAResolution, "differentials do not compose to zero");
  for (std::size_t i = 1; i <= len; ++i) {
    if (i == len && c.truncated) break;
    if (!is_exact_at(c, i))
      throw Error(ErrorKind::NotAResolution, "complex is not exact at index " + std::to_string(i));
  }
  std::vector<FreeModule> mods = c.modules;
  std::vector<Matrix> mats;
  for (const auto& f : c.maps) mats.push_back(f.matrix());
  const QuotientRing& ring = *c.ring();
  for (std::size_t i = 1; i <= len; ++i) {
    while (auto e = find_unit(mats[i - 1])) {
      mats[i - 1] = cancel(mats[i - 1], *e, ring);
      if (i < len) mats[i] = drop_row(mats[i], e->col);
      if (i > 1) mats[i - 2] = drop_col(mats[i - 2], e->row);
      mods[i].shifts.erase(mods[i].shifts.begin() + static_cast<std::ptrdiff_t>(e->col));
      mods[i - 1].shifts.erase(mods[i - 1].shifts.begin() + static_cast<std::ptrdiff_t>(e->row));
    }
  }
  FreeComplex out;
  out.truncated = c.truncated;
  out.modules = mods;
  for (std::size_t i = 1; i <= len; ++i) out.maps.emplace_back(mods[i], mods[i - 1], mats[i - 1]);
  while (out.length() > 0 && out.modules.back().rank() == 0 && !out.truncated) {
    out.modules.pop_back();
    out.maps.pop_back();
  }
  return out;
}

FreeComplex koszul_complex(const std::vector<Polynomial>& seq, const QuotientPtr& ring) {
  if (seq.empty()) throw Error(ErrorKind::InvalidArgument, "empty Koszul sequence");
  const std::size_t k = seq.size();
  std::vector<int> degs;
  for (const auto& f : seq) {
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotGraded, "Koszul sequence must be homogeneous");
    degs.push_back(f.degree());
  }
  std::vector<std::vector<std::vector<std::size_t>>> subsets(k + 1);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) s.push_back(i);
    subsets[s.size()].push_back(std::move(s));
  }
  FreeComplex c;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(k + 1);
  for (std::size_t p = 0; p <= k; ++p) {
    std::sort(subsets[p].begin(), subsets[p].end());
    std::vector<int> shifts;
    for (std::size_t j = 0; j < subsets[p].size(); ++j) {
      index[p][subsets[p][j]] = j;
      int s = 0;
      for (auto i : subsets[p][j]) s += degs[i];
      shifts.push_back(s);
    }
    c.modules.emplace_back(ring, shifts);
  }
  for (std::size_t p = 1; p <= k; ++p) {
    Matrix m(ring->base(), subsets[p - 1].size(), subsets[p].size());
    for (std::size_t col = 0; col < subsets[p].size(); ++col) {
      const auto& s = subsets[p][col];
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        m.at(index[p - 1].at(face), col) = j % 2 == 0 ? seq[s[j]] : -seq[s[j]];
      }
    }
    c.maps.emplace_back(c.modules[p], c.modules[p - 1], std::move(m));
  }
  return c;
}

ProjectiveDimension projective_dimension(const FPModule& m, std::optional<std::size_t> max_len) {
  Resolution r = free_resolution(m, max_len);
  if (r.complete()) return ProjectiveDimension{r.complex.length()};
  if (r.certificate) return ProjectiveDimension{std::nullopt};
  throw Error(ErrorKind::Inconclusive,
              "resolution truncated at length " + std::to_string(r.complex.length()) +
                  " without a periodicity certificate");
}

std::optional<PeriodicityCertificate> detect_periodicity(const FreeComplex& c) {
  const std::size_t len = c.length();
  for (std::size_t i = 1; i + 3 <= len; ++i) {
    auto delta = uniform_shift(c.modules[i + 2], c.modules[i]);
    if (!delta) continue;
    auto d1 = uniform_shift(c.modules[i + 1], c.modules[i - 1]);
    auto d2 = uniform_shift(c.modules[i + 3], c.modules[i + 1]);
    if (d1 != delta || d2 != delta) continue;
    if (c.d(i + 2).matrix() == c.d(i).matrix() && c.d(i + 3).matrix() == c.d(i + 1).matrix())
      return PeriodicityCertificate{i, 2, *delta};
  }
  return std::nullopt;
}

bool is_complex(const FreeComplex& c) {
  for (std::size_t i = 2; i <= c.length(); ++i)
    if (!vanishes_mod(c.d(i - 1).matrix() * c.d(i).matrix(), *c.ring())) return false;
  return true;
}

bool is_exact_at(const FreeComplex& c, std::size_t i) {
  if (i == 0 || i > c.length()) throw Error(ErrorKind::InvalidArgument, "exactness index out of range");
  const ModuleMap& d = c.d(i);
  if (d.source().rank() == 0) return true;
  auto ker = syzygies(d.matrix().columns(), c.ring(), d.target().shifts, d.source().shifts);
  if (i == c.length()) return ker.empty();
  return contained_in(ker, c.d(i + 1).matrix().columns(), c.ring(), d.source().shifts);
}

bool has_unit_entries(const ModuleMap& f) { return find_unit(f.matrix()).has_value(); }

}  // namespace smult
