#pragma once

#include <map>
#include <memory>
#include <vector>

#include "smult/groebner.hpp"
#include "smult/hilbert.hpp"

namespace smult {

/// Graded free module A(-s_1) (+) ... (+) A(-s_r); generator i has degree shifts[i].
struct FreeModule {
  QuotientPtr ring;
  std::vector<int> shifts;

  FreeModule() = default;
  FreeModule(QuotientPtr r, std::vector<int> s) : ring(std::move(r)), shifts(std::move(s)) {}
  static FreeModule of_rank(QuotientPtr ring, std::size_t rank, int shift = 0) {
    return FreeModule(std::move(ring), std::vector<int>(rank, shift));
  }

  std::size_t rank() const { return shifts.size(); }
  const RingPtr& base() const { return ring->base(); }
  FreeModule shifted(int delta) const;

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.shifts == b.shifts && a.ring == b.ring;
  }
};

/// Dense rows x cols matrix of polynomials.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static Matrix from_columns(RingPtr ring, std::size_t rows,
                             const std::vector<ModuleVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ModuleVector column(std::size_t c) const;
  std::vector<ModuleVector> columns() const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

/// Degree-0 map of graded free modules; entries are kept reduced modulo the
/// ring relations.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Throws NotGraded when an entry is not homogeneous of degree
  /// source.shifts[j] - target.shifts[i].
  ModuleMap(FreeModule source, FreeModule target, Matrix matrix);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  const QuotientPtr& ring() const { return target_.ring; }

  /// this o inner.
  ModuleMap compose(const ModuleMap& inner) const;
  bool is_zero() const { return matrix_.is_zero(); }

 private:
  FreeModule source_;
  FreeModule target_;
  Matrix matrix_;
};

/// Degrees of homogeneous vectors; zero vectors get `fallback`.
std::vector<int> vector_degrees(const std::vector<ModuleVector>& vectors,
                                std::span<const int> shifts, int fallback = 0);

/// Cokernel of a presentation map, with its relation Groebner basis and
/// Hilbert series computed once on first use.
class FPModule {
 public:
  explicit FPModule(ModuleMap presentation);

  static FPModule free(const FreeModule& generators);
  /// A / (ideal).
  static FPModule cyclic(const QuotientPtr& ring, const std::vector<Polynomial>& ideal);
  /// F / <relations>; relation degrees are read off the vectors.
  static FPModule from_relations(const FreeModule& generators,
                                 const std::vector<ModuleVector>& relations);

  const ModuleMap& presentation() const { return presentation_; }
  const FreeModule& generators() const { return presentation_.target(); }
  const QuotientPtr& ring() const { return presentation_.ring(); }
  std::vector<ModuleVector> relations() const { return presentation_.matrix().columns(); }

  const GroebnerBasis& basis() const;
  const HilbertSeries& hilbert_series() const;

 private:
  struct Cache;
  ModuleMap presentation_;
  std::shared_ptr<Cache> cache_;
};

struct HilbertData {
  std::map<int, long long> values;
  /// Hilbert polynomial, coefficients of n^k ascending (standard grading).
  std::vector<mpq_class> polynomial;
  int stabilization = 0;
};

long long hilbert_function(const FPModule& m, int degree);
HilbertData hilbert_data(const FPModule& m);
/// Throws InfiniteLength when krull_dim(m) > 0.
long long length(const FPModule& m);
/// Degree of the Hilbert polynomial plus one; -1 for the zero module.
int krull_dim(const FPModule& m);

FPModule tensor(const FPModule& m, const FPModule& n);
FPModule direct_sum(const FPModule& m, const FPModule& n);
/// Kernel of a map of free modules, presented on minimal kernel generators.
FPModule kernel(const ModuleMap& f);
/// Cokernel of a map of free modules.
FPModule cokernel(const ModuleMap& f);

/// Generators of {a in F_src : f(a) in <target_relations>}.
std::vector<ModuleVector> preimage_generators(const ModuleMap& f,
                                              const std::vector<ModuleVector>& target_relations);

/// (<gens> + <rels>) / <rels> inside the free module `ambient`.
FPModule subquotient(const FreeModule& ambient, const std::vector<ModuleVector>& gens,
                     const std::vector<ModuleVector>& rels);
/// Hilbert series of the same subquotient, without building its presentation.
HilbertSeries subquotient_series(const FreeModule& ambient, const std::vector<ModuleVector>& gens,
                                 const std::vector<ModuleVector>& rels);

void require_same_ring(const QuotientPtr& a, const QuotientPtr& b);

}  // namespace smult
