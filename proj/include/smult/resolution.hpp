#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smult/fpmodule.hpp"

namespace smult {

/// F_0 <- F_1 <- ... <- F_len with maps[i-1] = d_i : F_i -> F_{i-1}.
struct FreeComplex {
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> maps;
  /// Set when the complex stops before the resolution it approximates does.
  bool truncated = false;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  const ModuleMap& d(std::size_t i) const { return maps.at(i - 1); }
  const QuotientPtr& ring() const { return modules.front().ring; }
};

struct BettiTable {
  /// Generator degrees of F_i, ascending.
  std::vector<std::vector<int>> shifts;

  std::vector<std::size_t> ranks() const;
  std::string to_string() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const FreeComplex& c);

/// d_{i+2} = d_i and d_{i+3} = d_{i+1} entry for entry, with F_{i+2} = F_i(-shift)
/// and F_{i+3} = F_{i+1}(-shift).
struct PeriodicityCertificate {
  std::size_t onset = 0;
  std::size_t period = 2;
  int shift = 0;
};

struct Resolution {
  FreeComplex complex;
  std::optional<PeriodicityCertificate> certificate;

  bool complete() const { return !complex.truncated; }
  BettiTable betti() const { return betti_table(complex); }
};

/// Default resolution length: number of variables, plus 8 over quotient rings.
std::size_t default_max_len(const QuotientRing& ring);

/// Minimal graded free resolution out to F_{max_len}. Over a quotient ring the
/// tail is extended by the periodic pattern once a certificate is found.
Resolution free_resolution(const FPModule& m, std::optional<std::size_t> max_len = std::nullopt);

/// Cancels unit entries until none remain. Throws NotAResolution unless the
/// complex is exact at every positive index.
FreeComplex minimalize(const FreeComplex& c);

/// Koszul complex on a homogeneous sequence, basis of F_p the p-subsets in
/// lexicographic order, d(e_S) = sum_j (-1)^(j+1) f_{s_j} e_{S - s_j}.
FreeComplex koszul_complex(const std::vector<Polynomial>& seq, const QuotientPtr& ring);

struct ProjectiveDimension {
  /// Finite value, or nullopt for infinite.
  std::optional<std::size_t> value;
  bool infinite() const { return !value; }
};

/// Throws Inconclusive when the resolution is truncated without certificate.
ProjectiveDimension projective_dimension(const FPModule& m,
                                         std::optional<std::size_t> max_len = std::nullopt);

std::optional<PeriodicityCertificate> detect_periodicity(const FreeComplex& c);

/// Every composition d_{i-1} d_i vanishes modulo the ring relations.
bool is_complex(const FreeComplex& c);
/// ker d_i = im d_{i+1}; at i = length the image is zero.
bool is_exact_at(const FreeComplex& c, std::size_t i);
bool has_unit_entries(const ModuleMap& f);

}  // namespace smult
