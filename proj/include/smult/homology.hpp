#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smult/resolution.hpp"

namespace smult {

/// Complex of presented modules; maps act on generators and send relations
/// into relations.
struct FPComplex {
  enum class Direction { chain, cochain };

  std::vector<FPModule> objects;
  /// Chain: maps[i-1] : C_i -> C_{i-1}. Cochain: maps[i] : C^i -> C^{i+1}.
  std::vector<ModuleMap> maps;
  Direction direction = Direction::chain;

  std::size_t length() const { return objects.empty() ? 0 : objects.size() - 1; }
  const ModuleMap* outgoing(std::size_t i) const;
  const ModuleMap* incoming(std::size_t i) const;
};

/// F_i (x) N presented with N's relations on every generator of F_i.
FPComplex tensor_with_module(const FreeComplex& c, const FPModule& n);
/// Hom(F_i, N) as a cochain complex; generator (g, n) has degree
/// deg(n) - deg(g) and the maps are transposes.
FPComplex hom_into(const FreeComplex& c, const FPModule& n);

/// Consecutive maps compose into the relations of the target.
bool is_complex(const FPComplex& c);

FPModule homology_at(const FPComplex& c, std::size_t i);
HilbertSeries homology_series(const FPComplex& c, std::size_t i);
/// nullopt when the homology has positive dimension.
std::optional<long long> homology_length(const FPComplex& c, std::size_t i);

enum class Completeness { complete, truncated_with_certificate, truncated };
std::string to_string(Completeness c);

struct TorProfile {
  std::vector<long long> lengths;
  Completeness completeness = Completeness::truncated;
  std::optional<PeriodicityCertificate> certificate;
  /// Length of the computed resolution of the first argument.
  std::size_t resolution_length = 0;

  bool complete() const { return completeness == Completeness::complete; }
};

/// Default bound on the homological index: the number of variables over a
/// polynomial ring, otherwise one below the default resolution length.
std::size_t default_tor_bound(const QuotientRing& ring);

/// Lengths of Tor_i(M, N), i <= upto, from a resolution of M. Throws
/// SerreConditionViolated when M (x) N has infinite length.
TorProfile tor(const FPModule& m, const FPModule& n, std::optional<std::size_t> upto = std::nullopt);
/// Lengths of Ext^i(M, N), i <= upto, from Hom(resolution of M, N).
TorProfile ext(const FPModule& m, const FPModule& n, std::optional<std::size_t> upto = std::nullopt);

/// Throws SerreConditionViolated unless l(M (x) N) is finite; returns it.
long long serre_length(const FPModule& m, const FPModule& n);

}  // namespace smult
