#include <gtest/gtest.h>

#include <random>

#include "oracle/dense.hpp"
#include "smult/error.hpp"
#include "smult/fpmodule.hpp"

using namespace smult;

namespace {

RingPtr ring(std::vector<std::string> vars) {
  return RingSpec::make(FieldSpec::rationals(), std::move(vars));
}

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

FPModule cyc(const QuotientPtr& a, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(g, a->base()));
  return FPModule::cyclic(a, ps);
}

std::vector<ModuleVector> as_vectors(const std::vector<Polynomial>& ps) {
  std::vector<ModuleVector> out;
  for (const auto& p : ps) out.push_back(ModuleVector({p}));
  return out;
}

long long oracle_hf(const FPModule& m, int d) {
  auto rels = m.relations();
  return oracle::quotient_dim(m.ring()->base()->nvars(), m.generators().shifts, rels,
                              vector_degrees(rels, m.generators().shifts),
                              m.ring()->relations(), d);
}

const char* kVars4[] = {"x", "y", "z", "w"};

std::vector<std::string> random_monomial_ideal(std::mt19937& rng, int count, int maxexp) {
  std::vector<std::string> out;
  std::uniform_int_distribution<int> ex(0, maxexp);
  for (int k = 0; k < count; ++k) {
    std::string s = "1";
    for (int i = 0; i < 4; ++i) {
      int e = ex(rng);
      if (e) s += std::string("*") + kVars4[i] + "^" + std::to_string(e);
    }
    if (s == "1") s = "x";
    out.push_back(s);
  }
  return out;
}

// Combinatorial dimension of S/I for a monomial ideal: the largest variable set
// containing the support of no generator.
int support_dimension(const std::vector<Polynomial>& gens, std::size_t n) {
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool face = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g.lead().mono[i] > 0 && !(mask >> i & 1u)) inside = false;
      if (inside) face = false;
    }
    if (face) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST(HilbertFunction, PolynomialRingDegreeThree) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  EXPECT_EQ(hilbert_function(FPModule::free(FreeModule(s, {0})), 3), 4);
}

TEST(HilbertFunction, ResidueField) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  auto k = cyc(s, {"x", "y"});
  EXPECT_EQ(hilbert_function(k, 0), 1);
  for (int d = 1; d < 6; ++d) EXPECT_EQ(hilbert_function(k, d), 0);
}

TEST(HilbertFunction, HypersurfaceDegreeTwo) {
  auto s = QuotientRing::make(ring({"x", "y", "z", "u", "v", "w"}));
  auto m = cyc(s, {"u*x + v*y + w*z"});
  EXPECT_EQ(hilbert_function(m, 2), 20);
  EXPECT_EQ(oracle_hf(m, 2), 20);
}

TEST(HilbertFunction, ShiftedFreeModule) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  auto m = FPModule::free(FreeModule(s, {2}));
  EXPECT_EQ(hilbert_function(m, 1), 0);
  EXPECT_EQ(hilbert_function(m, 2), 1);
  EXPECT_EQ(hilbert_function(m, 4), 3);
}

TEST(Length, Examples) {
  auto s2 = QuotientRing::make(ring({"x", "y"}));
  EXPECT_EQ(length(cyc(s2, {"x", "y"})), 1);
  EXPECT_EQ(length(cyc(s2, {"x", "y^3"})), 3);
  auto s4 = QuotientRing::make(ring({"x", "y", "z", "w"}));
  auto tp = cyc(s4, {"x*z", "x*w", "y*z", "y*w", "x - z", "y - w"});
  EXPECT_EQ(length(tp), 3);
  long long total = 0;
  for (int d = 0; d < 6; ++d) total += oracle_hf(tp, d);
  EXPECT_EQ(total, 3);
}

TEST(Length, InfiniteIsAnError) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  try {
    length(cyc(s, {"x"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteLength);
  }
}

TEST(KrullDim, Examples) {
  auto s = QuotientRing::make(ring({"x", "y", "z", "w"}));
  EXPECT_EQ(krull_dim(FPModule::free(FreeModule(s, {0}))), 4);
  EXPECT_EQ(krull_dim(cyc(s, {"x", "y"})), 2);
  EXPECT_EQ(krull_dim(cyc(s, {"1"})), -1);
  EXPECT_EQ(krull_dim(FPModule::free(FreeModule(s, {}))), -1);
  EXPECT_EQ(krull_dim(cyc(s, {"x*z", "x*w", "y*z", "y*w"})), 2);
}

TEST(KrullDim, OverQuotientRing) {
  auto base = ring({"x", "y"});
  auto a = QuotientRing::make(base, {P("x*y", base)});
  EXPECT_EQ(krull_dim(FPModule::free(FreeModule(a, {0}))), 1);
  EXPECT_EQ(krull_dim(cyc(a, {"x"})), 1);
  EXPECT_EQ(krull_dim(cyc(a, {"x + y"})), 0);
  EXPECT_EQ(length(cyc(a, {"x + y"})), 2);
}

TEST(HilbertData, PolynomialMatchesFunctionFromStabilization) {
  auto s = QuotientRing::make(ring({"x", "y", "z"}));
  auto m = cyc(s, {"x^2", "x*y"});
  HilbertData hd = hilbert_data(m);
  for (int d = hd.stabilization; d < hd.stabilization + 6; ++d)
    EXPECT_EQ(evaluate(hd.polynomial, d), mpq_class(static_cast<long>(hilbert_function(m, d)))) << d;
  for (const auto& [d, v] : hd.values) EXPECT_EQ(v, oracle_hf(m, d)) << d;
}

TEST(Tensor, UnitIsNeutral) {
  auto s = QuotientRing::make(ring({"x", "y", "z"}));
  auto m = cyc(s, {"x^2", "y*z"});
  auto a = FPModule::free(FreeModule(s, {0}));
  auto t = tensor(m, a);
  for (int d = 0; d < 8; ++d) EXPECT_EQ(hilbert_function(t, d), hilbert_function(m, d));
}

TEST(Tensor, TransverseLines) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  auto t = tensor(cyc(s, {"x"}), cyc(s, {"y"}));
  EXPECT_EQ(length(t), 1);
}

TEST(Tensor, CyclicModulesAddIdeals) {
  auto s = QuotientRing::make(ring({"x", "y", "z"}));
  auto t = tensor(cyc(s, {"x*y", "z^2"}), cyc(s, {"x - y", "y*z"}));
  auto sum = cyc(s, {"x*y", "z^2", "x - y", "y*z"});
  for (int d = 0; d < 8; ++d) EXPECT_EQ(hilbert_function(t, d), oracle_hf(sum, d)) << d;
}

TEST(Tensor, RingMismatch) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  auto t = QuotientRing::make(ring({"x", "y", "z"}));
  try {
    tensor(cyc(s, {"x"}), cyc(t, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Kernel, MultiplicationOnDomainIsInjective) {
  auto s = QuotientRing::make(ring({"x"}));
  Matrix m(s->base(), 1, 1);
  m.at(0, 0) = P("x", s->base());
  ModuleMap f(FreeModule(s, {1}), FreeModule(s, {0}), m);
  auto k = kernel(f);
  EXPECT_EQ(k.generators().rank(), 0u);
  EXPECT_EQ(krull_dim(k), -1);
}

TEST(Kernel, MultiplicationOnNode) {
  auto base = ring({"x", "y"});
  auto a = QuotientRing::make(base, {P("x*y", base)});
  Matrix m(base, 1, 1);
  m.at(0, 0) = P("x", base);
  ModuleMap f(FreeModule(a, {1}), FreeModule(a, {0}), m);
  auto k = kernel(f);
  // Oracle: ker(x) = y*A(-1), whose degree-d part is spanned by y^(d-1).
  ASSERT_EQ(k.generators().rank(), 1u);
  EXPECT_EQ(k.generators().shifts[0], 2);
  EXPECT_EQ(hilbert_function(k, 0), 0);
  EXPECT_EQ(hilbert_function(k, 1), 0);
  for (int d = 2; d < 7; ++d) EXPECT_EQ(hilbert_function(k, d), 1);
}

TEST(Cokernel, ZeroMapGivesTarget) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  ModuleMap f(FreeModule(s, {1, 2}), FreeModule(s, {0, 0}), Matrix(s->base(), 2, 2));
  auto c = cokernel(f);
  for (int d = 0; d < 5; ++d) EXPECT_EQ(hilbert_function(c, d), 2 * (d + 1));
}

TEST(ModuleMap, RejectsWrongDegree) {
  auto s = QuotientRing::make(ring({"x", "y"}));
  Matrix m(s->base(), 1, 1);
  m.at(0, 0) = P("x^2", s->base());
  try {
    ModuleMap(FreeModule(s, {1}), FreeModule(s, {0}), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotGraded);
  }
}

TEST(Subquotient, SeriesAgreesWithPresentation) {
  auto s = QuotientRing::make(ring({"x", "y", "z"}));
  auto r = s->base();
  FreeModule f(s, {0});
  auto gens = as_vectors({P("x", r), P("y^2", r)});
  auto rels = as_vectors({P("x*y", r), P("y^3", r), P("z*x", r)});
  auto sq = subquotient(f, gens, rels);
  auto hs = subquotient_series(f, gens, rels);
  for (int d = 0; d < 8; ++d) {
    // Oracle: dim (K+R)_d - dim R_d.
    long long with = oracle::quotient_dim(3, {0}, rels, {2, 3, 2}, {}, d);
    auto all = rels;
    all.insert(all.end(), gens.begin(), gens.end());
    long long without = oracle::quotient_dim(3, {0}, all, {2, 3, 2, 1, 2}, {}, d);
    EXPECT_EQ(hilbert_function(sq, d), with - without) << d;
    EXPECT_EQ(hs.value(d), with - without) << d;
  }
}

TEST(Properties, HilbertSeriesIsRational) {
  std::mt19937 rng(11);
  auto s = QuotientRing::make(ring({"x", "y", "z", "w"}));
  for (int trial = 0; trial < 10; ++trial) {
    auto m = cyc(s, random_monomial_ideal(rng, 3, 2));
    HilbertData hd = hilbert_data(m);
    int top = hd.stabilization + 6;
    // (sum HF(d) t^d) (1-t)^4 truncated at top must vanish past the numerator.
    std::vector<long long> hf(top + 1);
    for (int d = 0; d <= top; ++d) hf[d] = hilbert_function(m, d);
    for (int k = 0; k < 4; ++k)
      for (int d = top; d > 0; --d) hf[d] -= hf[d - 1];
    int numer_top = m.hilbert_series().offset() + static_cast<int>(m.hilbert_series().numerator().size());
    for (int d = numer_top; d <= top; ++d) EXPECT_EQ(hf[d], 0) << trial << " " << d;
  }
}

TEST(Properties, LengthIsAdditive) {
  std::mt19937 rng(5);
  auto s = QuotientRing::make(ring({"x", "y", "z", "w"}));
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_monomial_ideal(rng, 2, 2);
    auto b = random_monomial_ideal(rng, 2, 2);
    for (auto* g : {&a, &b}) {
      g->push_back("x^3");
      g->push_back("y^2");
      g->push_back("z^2");
      g->push_back("w^3");
    }
    auto m = cyc(s, a), n = cyc(s, b);
    EXPECT_EQ(length(direct_sum(m, n)), length(m) + length(n));
  }
}

TEST(Properties, DimensionMatchesSupportComplex) {
  std::mt19937 rng(17);
  auto s = QuotientRing::make(ring({"x", "y", "z", "w"}));
  for (int trial = 0; trial < 20; ++trial) {
    auto gens = random_monomial_ideal(rng, 1 + trial % 4, 3);
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(g, s->base()));
    EXPECT_EQ(krull_dim(FPModule::cyclic(s, ps)), support_dimension(ps, 4)) << trial;
  }
}

TEST(Properties, TensorIsSymmetric) {
  std::mt19937 rng(23);
  auto s = QuotientRing::make(ring({"x", "y", "z", "w"}));
  for (int trial = 0; trial < 8; ++trial) {
    auto m = cyc(s, random_monomial_ideal(rng, 2, 2));
    auto n = cyc(s, random_monomial_ideal(rng, 2, 2));
    auto mn = tensor(m, n), nm = tensor(n, m);
    for (int d = 0; d < 7; ++d) EXPECT_EQ(hilbert_function(mn, d), hilbert_function(nm, d));
  }
}
