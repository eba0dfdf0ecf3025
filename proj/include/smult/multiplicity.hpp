#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smult/homology.hpp"

namespace smult {

/// Tor profile over which the alternating sum is defined: complete, or
/// periodic with a zero tail. Resolves M first, then N over quotient rings.
/// Throws Inconclusive otherwise.
TorProfile euler_tor_profile(const FPModule& m, const FPModule& n);

long long chi(const FPModule& m, const FPModule& n);
long long xi(const FPModule& m, const FPModule& n);
/// sum_{j >= i} (-1)^(j-i) l(Tor_j(M, N)).
long long chi_higher(const FPModule& m, const FPModule& n, std::size_t i);
std::vector<long long> chi_higher_all(const TorProfile& p);
long long alternating_sum(const TorProfile& p);

struct SamuelData {
  std::vector<Polynomial> ideal;
  /// l(M / a^n M) for n >= stabilization, coefficients of n^j ascending.
  std::vector<mpq_class> polynomial;
  int stabilization = 1;
  std::size_t k = 0;
  long long e = 0;
  std::vector<long long> values;  // l(M / a^n M) for n = 1, 2, ...
};

/// Throws NotPrimary when l(M / aM) is infinite and InvalidArgument when
/// deg P exceeds k.
SamuelData hilbert_samuel(const FPModule& m, const std::vector<Polynomial>& ideal,
                          std::optional<std::size_t> k = std::nullopt);

/// Euler characteristic of K(seq) (x) M. Throws NotPrimary unless
/// l(M / (seq) M) is finite.
long long koszul_euler(const std::vector<Polynomial>& seq, const FPModule& m);

/// l(Tor_2i) - l(Tor_2i+1) at the first certified periodic pair; 0 when a
/// side has finite projective dimension. Requires a hypersurface ring.
long long theta(const FPModule& m, const FPModule& n);

enum class VerdictStatus { pass, fail, not_applicable };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string name;
  VerdictStatus status = VerdictStatus::not_applicable;
  std::string detail;
};

enum class IntersectionCase { proper, deficient, excess };
std::string to_string(IntersectionCase c);

struct MultiplicityReport {
  int dim_m = 0;
  int dim_n = 0;
  int dim_a = 0;
  long long tensor_length = 0;
  TorProfile tor;
  std::vector<long long> ext_lengths;
  long long chi = 0;
  std::optional<long long> xi;
  std::vector<long long> chi_higher;
  IntersectionCase kind = IntersectionCase::deficient;
  bool cohen_macaulay_m = false;
  bool cohen_macaulay_n = false;
  std::vector<Verdict> verdicts;

  const Verdict* verdict(const std::string& name) const;
  bool all_pass() const;
};

/// Over a polynomial ring: depth (n - pd) equals Krull dimension.
bool is_cohen_macaulay(const FPModule& m);

MultiplicityReport verify_serre_pair(const FPModule& m, const FPModule& n);

struct DiagonalReport {
  TorProfile a_side;
  TorProfile b_side;
  bool agree = false;
};

/// Tor^A(M, N) against Tor^B(M # N, B / diagonal) with B = A (x)_k A. Requires
/// a polynomial ring.
DiagonalReport diagonal_reduction_check(const FPModule& m, const FPModule& n);

}  // namespace smult
