#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "smult/groebner.hpp"

namespace smult {

/// Numerator of the Hilbert series of S/L for a monomial ideal L, with
/// coefficient k standing for t^k. Pivot recursion on a variable power.
std::vector<long long> monomial_quotient_numerator(std::vector<Monomial> generators,
                                                   std::span<const int> weights);

/// Hilbert series N(t) / prod_i (1 - t^{w_i}) of a graded S-module, N a
/// Laurent polynomial stored from t^offset upward.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::vector<int> weights, int offset, std::vector<long long> numerator);

  /// Series of F / U from the leading terms of a Groebner basis of U.
  static HilbertSeries of_lead_terms(const std::vector<LeadTerm>& leads,
                                     std::span<const int> shifts, std::span<const int> weights);

  std::span<const long long> numerator() const { return numerator_; }
  int offset() const { return offset_; }
  std::span<const int> weights() const { return weights_; }
  bool is_zero() const { return numerator_.empty(); }

  /// Krull dimension: number of variables minus the order of vanishing of
  /// the numerator at t = 1; -1 for the zero series.
  int dimension() const;
  /// Sum of all coefficients when the series is a polynomial, nullopt otherwise.
  std::optional<long long> length() const;
  long long value(int degree) const;
  /// Coefficients for degrees from..to inclusive.
  std::vector<long long> values(int from, int to) const;

  /// Standard grading only: the Hilbert polynomial as coefficients of d^k
  /// and the least degree from which it agrees with the Hilbert function.
  std::pair<std::vector<mpq_class>, int> hilbert_polynomial() const;

  HilbertSeries operator+(const HilbertSeries& other) const;
  HilbertSeries operator-(const HilbertSeries& other) const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) = default;

 private:
  void trim();

  std::vector<int> weights_;
  int offset_ = 0;
  std::vector<long long> numerator_;
};

/// Coefficients (ascending powers) of the unique polynomial of degree
/// < points.size() through the given points.
std::vector<mpq_class> interpolate(const std::vector<std::pair<long, mpq_class>>& points);
mpq_class evaluate(const std::vector<mpq_class>& coefficients, const mpq_class& x);

}  // namespace smult
