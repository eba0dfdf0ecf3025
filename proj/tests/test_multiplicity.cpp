#include <gtest/gtest.h>

#include <random>

#include "oracle/dense.hpp"
#include "smult/error.hpp"
#include "smult/multiplicity.hpp"

using namespace smult;

namespace {

RingPtr ring(std::vector<std::string> vars) {
  return RingSpec::make(FieldSpec::rationals(), std::move(vars));
}

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(std::vector<std::string> gens, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(P(g, r));
  return out;
}

FPModule cyc(const QuotientPtr& a, std::vector<std::string> gens) {
  return FPModule::cyclic(a, Ps(std::move(gens), a->base()));
}

QuotientPtr s2() { return QuotientRing::make(ring({"x", "y"})); }
QuotientPtr s4() { return QuotientRing::make(ring({"x", "y", "z", "w"})); }
QuotientPtr node() {
  auto b = ring({"x", "y"});
  return QuotientRing::make(b, {P("x*y", b)});
}

std::vector<long long> L(std::initializer_list<long long> v) { return v; }

const char* kTwoPlanes[] = {"x*z", "x*w", "y*z", "y*w"};

FPModule two_planes(const QuotientPtr& s) {
  return cyc(s, {kTwoPlanes[0], kTwoPlanes[1], kTwoPlanes[2], kTwoPlanes[3]});
}

std::string random_monomial(std::mt19937& rng) {
  const char* v[] = {"x", "y", "z", "w"};
  std::uniform_int_distribution<int> ex(0, 2);
  std::string s = "1";
  for (int i = 0; i < 4; ++i)
    if (int e = ex(rng)) s += std::string("*") + v[i] + "^" + std::to_string(e);
  return s == "1" ? "x*y" : s;
}

}  // namespace

TEST(Chi, Examples) {
  auto s = s4();
  EXPECT_EQ(chi(cyc(s, {"x", "y"}), cyc(s, {"z", "w"})), 1);
  EXPECT_EQ(chi(two_planes(s), cyc(s, {"x - z", "y - w"})), 2);
  EXPECT_EQ(chi(cyc(s, {"x", "y"}), cyc(s, {"y", "z", "w"})), 0);
}

TEST(Xi, Examples) {
  auto s = s4();
  EXPECT_EQ(xi(two_planes(s), cyc(s, {"x - z", "y - w"})), 2);
  EXPECT_EQ(xi(cyc(s, {"x", "y"}), cyc(s, {"z", "w"})), 1);
  EXPECT_EQ(xi(cyc(s, {"x", "y"}), cyc(s, {"y", "z", "w"})), 0);
}

TEST(ChiHigher, Examples) {
  auto s = s4();
  auto m = two_planes(s), n = cyc(s, {"x - z", "y - w"});
  EXPECT_EQ(chi_higher(m, n, 0), chi(m, n));
  EXPECT_EQ(chi_higher(m, n, 1), 1);
  EXPECT_EQ(chi_higher(m, n, 2), 0);
  EXPECT_EQ(chi_higher_all(tor(m, n)), L({2, 1, 0, 0, 0}));
}

TEST(HilbertSamuel, MaximalIdealOfPlane) {
  auto s = s2();
  auto d = hilbert_samuel(FPModule::free(FreeModule(s, {0})), Ps({"x", "y"}, s->base()), 2);
  EXPECT_EQ(d.e, 1);
  ASSERT_EQ(d.polynomial.size(), 3u);
  EXPECT_EQ(d.polynomial[2], mpq_class(1, 2));
}

TEST(HilbertSamuel, PlaneCurveDegree) {
  auto s = s2();
  auto b = s->base();
  for (std::string f : {"x", "x^2 - y^2", "x^3 + y^3 - x*y^2", "y^4"}) {
    auto m = cyc(s, {f});
    auto d = hilbert_samuel(m, Ps({"x", "y"}, b), 1);
    EXPECT_EQ(d.e, P(f, b).degree()) << f;
    // Oracle: l(S/(f, (x,y)^n)) summed degree by degree.
    for (std::size_t n = 1; n <= d.values.size(); ++n) {
      std::vector<ModuleVector> rels{ModuleVector({P(f, b)})};
      std::vector<int> degs{P(f, b).degree()};
      for (std::size_t i = 0; i <= n; ++i) {
        rels.push_back(ModuleVector({P("x^" + std::to_string(i) + "*y^" + std::to_string(n - i), b)}));
        degs.push_back(static_cast<int>(n));
      }
      long long total = 0;
      for (int deg = 0; deg <= static_cast<int>(n) + 4; ++deg)
        total += oracle::quotient_dim(2, {0}, rels, degs, {}, deg);
      EXPECT_EQ(d.values[n - 1], total) << f << " n=" << n;
    }
  }
}

TEST(HilbertSamuel, NonReducedParameterIdeal) {
  auto s = s2();
  auto d = hilbert_samuel(FPModule::free(FreeModule(s, {0})), Ps({"x^2", "y"}, s->base()), 2);
  EXPECT_EQ(d.e, 2);
}

TEST(HilbertSamuel, NotPrimary) {
  auto s = s2();
  try {
    hilbert_samuel(FPModule::free(FreeModule(s, {0})), Ps({"x"}, s->base()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimary);
  }
}

TEST(HilbertSamuel, DegreeBelowKGivesZero) {
  auto s = QuotientRing::make(ring({"x"}));
  auto d = hilbert_samuel(FPModule::free(FreeModule(s, {0})), Ps({"x"}, s->base()), 2);
  EXPECT_EQ(d.e, 0);
}

TEST(KoszulEuler, Examples) {
  auto s = s2();
  auto a = FPModule::free(FreeModule(s, {0}));
  EXPECT_EQ(koszul_euler(Ps({"x", "y"}, s->base()), a), 1);
  EXPECT_EQ(koszul_euler(Ps({"x^2", "y"}, s->base()), a), 2);
  auto s1 = QuotientRing::make(ring({"x"}));
  EXPECT_EQ(koszul_euler(Ps({"x", "x"}, s1->base()), FPModule::free(FreeModule(s1, {0}))), 0);
}

TEST(Theta, Node) {
  auto a = node();
  EXPECT_EQ(theta(cyc(a, {"x"}), cyc(a, {"y"})), 1);
  EXPECT_EQ(theta(cyc(a, {"x"}), cyc(a, {"x"})), -1);
  EXPECT_EQ(theta(FPModule::free(FreeModule(a, {0})), cyc(a, {"x"})), 0);
}

TEST(Theta, NeedsHypersurface) {
  auto s = s2();
  try {
    theta(cyc(s, {"x"}), cyc(s, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRing);
  }
}

TEST(Verify, DeficientPairVanishes) {
  auto s = s4();
  auto r = verify_serre_pair(cyc(s, {"x", "y"}), cyc(s, {"y", "z", "w"}));
  EXPECT_EQ(r.kind, IntersectionCase::deficient);
  EXPECT_EQ(r.chi, 0);
  EXPECT_EQ(r.verdict("vanishing")->status, VerdictStatus::pass);
  EXPECT_EQ(r.verdict("positivity")->status, VerdictStatus::not_applicable);
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, ProperCohenMacaulayPair) {
  auto s = s4();
  auto r = verify_serre_pair(cyc(s, {"x", "y"}), cyc(s, {"z", "w"}));
  EXPECT_EQ(r.kind, IntersectionCase::proper);
  EXPECT_EQ(r.tor.lengths, L({1, 0, 0, 0, 0}));
  EXPECT_EQ(r.verdict("cm_fast_path")->status, VerdictStatus::pass);
  EXPECT_EQ(r.chi, r.tensor_length);
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, TwoPlanes) {
  auto s = s4();
  auto r = verify_serre_pair(two_planes(s), cyc(s, {"x - z", "y - w"}));
  EXPECT_EQ(r.tor.lengths, L({3, 1, 0, 0, 0}));
  EXPECT_EQ(r.chi, 2);
  EXPECT_EQ(r.xi, 2);
  EXPECT_FALSE(r.cohen_macaulay_m);
  EXPECT_EQ(r.verdict("positivity")->status, VerdictStatus::pass);
  EXPECT_EQ(r.verdict("cm_fast_path")->status, VerdictStatus::not_applicable);
  EXPECT_EQ(r.verdict("higher_euler")->detail, "higher Tor nonzero");
  EXPECT_TRUE(r.all_pass());
}

TEST(Verify, NodeNeedsFiniteProjectiveDimension) {
  auto a = node();
  try {
    verify_serre_pair(cyc(a, {"x"}), cyc(a, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Inconclusive);
  }
  auto r = verify_serre_pair(cyc(a, {"x + y"}), cyc(a, {"x"}));
  EXPECT_EQ(r.kind, IntersectionCase::proper);
  EXPECT_EQ(r.chi, 1);
  EXPECT_EQ(r.verdict("positivity")->status, VerdictStatus::not_applicable);
}

TEST(Diagonal, Examples) {
  auto s = s2();
  auto d = diagonal_reduction_check(cyc(s, {"x"}), cyc(s, {"y"}));
  EXPECT_TRUE(d.agree);
  EXPECT_EQ(d.a_side.lengths, L({1, 0, 0}));
  auto s1 = QuotientRing::make(ring({"x"}));
  auto k = diagonal_reduction_check(cyc(s1, {"x"}), cyc(s1, {"x"}));
  EXPECT_TRUE(k.agree);
  EXPECT_EQ(k.b_side.lengths, L({1, 1}));
}

TEST(Diagonal, TwoPlanes) {
  auto s = s4();
  auto d = diagonal_reduction_check(two_planes(s), cyc(s, {"x - z", "y - w"}));
  EXPECT_EQ(d.b_side.lengths, L({3, 1, 0, 0, 0}));
  EXPECT_TRUE(d.agree);
}

TEST(Diagonal, RejectsQuotients) {
  auto a = node();
  try {
    diagonal_reduction_check(cyc(a, {"x"}), cyc(a, {"y"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRing);
  }
}

TEST(Properties, EulerFormAndSymmetry) {
  std::mt19937 rng(41);
  auto s = s4();
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    auto m = cyc(s, {random_monomial(rng), random_monomial(rng), "x^3"});
    auto n = cyc(s, {random_monomial(rng), "y^2", "z^2", "w^2"});
    try {
      long long c = chi(m, n);
      long long x = xi(m, n);
      int dn = krull_dim(n);
      EXPECT_EQ(c, dn % 2 ? -x : x) << trial;
      EXPECT_EQ(c, chi(n, m)) << trial;
      EXPECT_LE(krull_dim(m) + dn, 4);
      ++checked;
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::SerreConditionViolated);
    }
  }
  EXPECT_GE(checked, 5);
}

TEST(Properties, Biadditivity) {
  // 0 -> S/(y,z)(-1) --x--> S/(xy, xz) ... against N = S/(x - y - z, w).
  auto s = s4();
  auto b = s->base();
  auto sub = FPModule::from_relations(FreeModule(s, {1}),
                                      {ModuleVector({P("y", b)}), ModuleVector({P("z", b)})});
  auto mid = cyc(s, {"x*y", "x*z"});
  auto quo = cyc(s, {"x"});
  auto n = cyc(s, {"x - y - z", "w", "y^2"});
  EXPECT_EQ(chi(mid, n), chi(sub, n) + chi(quo, n));
}

TEST(Properties, ProperCaseAgreesWithSamuel) {
  auto s = s4();
  auto b = s->base();
  struct Pair {
    std::vector<std::string> p, q;
  };
  std::vector<Pair> pairs{{{"x", "y"}, {"z", "w"}},
                          {{"x*w - y*z"}, {"x - w", "y", "z"}},
                          {{"x*z - y^2", "y*w - z^2", "x*w - y*z"}, {"x - w", "y + z"}}};
  for (const auto& pr : pairs) {
    auto m = cyc(s, pr.p);
    auto n = cyc(s, pr.q);
    auto d = hilbert_samuel(m, Ps(pr.q, b), static_cast<std::size_t>(krull_dim(m)));
    EXPECT_EQ(chi(m, n), d.e) << pr.q[0];
    EXPECT_EQ(koszul_euler(Ps(pr.q, b), m), d.e) << pr.q[0];
  }
}

TEST(Properties, HigherEulerNonnegative) {
  std::mt19937 rng(43);
  auto s = s4();
  for (int trial = 0; trial < 10; ++trial) {
    auto m = cyc(s, {random_monomial(rng), random_monomial(rng), "x^2*y", "z^3", "w^2"});
    auto n = cyc(s, {random_monomial(rng), "x - z"});
    try {
      auto p = euler_tor_profile(m, n);
      auto h = chi_higher_all(p);
      for (std::size_t i = 1; i < h.size(); ++i) {
        EXPECT_GE(h[i], 0);
        if (p.lengths[i]) EXPECT_GT(h[i], 0);
      }
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::SerreConditionViolated);
    }
  }
}
