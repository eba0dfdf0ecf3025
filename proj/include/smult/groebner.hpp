#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smult/polyring.hpp"

namespace smult {

/// Element of a free module S^r, one polynomial per basis generator.
struct ModuleVector {
  std::vector<Polynomial> components;

  ModuleVector() = default;
  explicit ModuleVector(std::vector<Polynomial> c) : components(std::move(c)) {}
  static ModuleVector zero(const RingPtr& ring, std::size_t rank);
  static ModuleVector unit(const RingPtr& ring, std::size_t rank, std::size_t i);

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  /// Common value of deg(component) + shift over nonzero components, or
  /// nullopt for the zero vector and for inhomogeneous vectors.
  std::optional<int> degree(std::span<const int> shifts) const;
  bool is_homogeneous(std::span<const int> shifts) const;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);
  ModuleVector scaled(const Polynomial& f) const;

  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.components == b.components;
  }

  std::string to_string() const;
};

/// Monomial order on a free module: optional elimination blocks (lower block
/// index is larger), then degree-plus-shift for degree-compatible ring orders,
/// then the ring order on the monomial, then lower component index larger.
class ModuleOrder {
 public:
  ModuleOrder(RingPtr ring, std::vector<int> shifts, std::vector<int> blocks = {});

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;

  const RingPtr& ring() const { return ring_; }
  std::span<const int> shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  int block(std::uint32_t c) const { return blocks_.empty() ? 0 : blocks_[c]; }

 private:
  RingPtr ring_;
  std::vector<int> shifts_;
  std::vector<int> blocks_;
};

struct LeadTerm {
  Monomial mono;
  std::uint32_t component = 0;
};

namespace detail {
struct GbData;
}

/// Reduced Groebner basis of a submodule U of S^r, lifted from A = S/I by
/// adjoining I*e_c for every component c. Normal forms modulo the basis are
/// canonical representatives of A^r / U.
class GroebnerBasis {
 public:
  GroebnerBasis();
  ~GroebnerBasis();
  GroebnerBasis(const GroebnerBasis&);
  GroebnerBasis& operator=(const GroebnerBasis&);
  GroebnerBasis(GroebnerBasis&&) noexcept;
  GroebnerBasis& operator=(GroebnerBasis&&) noexcept;

  const QuotientPtr& ring() const;
  const ModuleOrder& order() const;
  std::size_t size() const;
  /// Basis elements in ascending order of leading term.
  std::vector<ModuleVector> generators() const;
  std::vector<LeadTerm> lead_terms() const;
  /// Reduction steps spent building the basis.
  std::uint64_t steps() const;

  ModuleVector normal_form(const ModuleVector& v) const;
  bool contains(const ModuleVector& v) const { return normal_form(v).is_zero(); }

  /// S-vector of basis elements i and j, nullopt when their leading terms lie
  /// in different components.
  std::optional<ModuleVector> s_vector(std::size_t i, std::size_t j) const;

 private:
  friend GroebnerBasis buchberger(const std::vector<ModuleVector>&, const QuotientPtr&,
                                  std::vector<int>, std::vector<int>);
  std::shared_ptr<const detail::GbData> data_;
};

/// Buchberger with sugar-degree pair selection and FIFO tie-break. Throws
/// ResourceLimitExceeded when the current step cap is exceeded. Shifts default
/// to zero; `blocks` selects an elimination order.
GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, const QuotientPtr& ring,
                         std::vector<int> shifts = {}, std::vector<int> blocks = {});

ModuleVector normal_form(const ModuleVector& v, const GroebnerBasis& basis);

/// Reduced Groebner basis of an ideal of the polynomial ring, ascending.
std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& ideal);

/// Generators of the kernel of A^k -> A^r sending e_j to vectors[j]. The
/// source shifts default to the degrees of the vectors. For homogeneous input
/// the result is a minimal generating set.
std::vector<ModuleVector> syzygies(const std::vector<ModuleVector>& vectors,
                                   const QuotientPtr& ring, std::vector<int> target_shifts,
                                   std::vector<int> source_shifts = {});

/// Minimal homogeneous generating subset of the submodule of A^r spanned by
/// `vectors`, picked greedily in order of degree. Zero vectors are dropped.
std::vector<ModuleVector> minimal_generators(const std::vector<ModuleVector>& vectors,
                                             const QuotientPtr& ring, std::vector<int> shifts);

}  // namespace smult
