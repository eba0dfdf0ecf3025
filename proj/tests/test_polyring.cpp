#include <gtest/gtest.h>

#include <random>

#include "smult/polyring.hpp"

using namespace smult;

namespace {

RingPtr ring(std::vector<std::string> vars, OrderKind kind = OrderKind::grevlex,
             FieldSpec field = FieldSpec::rationals()) {
  return RingSpec::make(field, std::move(vars), MonomialOrder{kind});
}

}  // namespace

TEST(PolyArith, Examples) {
  auto r = ring({"x", "y"});
  Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  EXPECT_EQ((x + y) + (x - y), parse_polynomial("2*x", r));
  EXPECT_EQ((x + y) * (x - y), parse_polynomial("x^2 - y^2", r));

  auto f2 = ring({"x", "y"}, OrderKind::grevlex, FieldSpec::prime(2));
  Polynomial a = parse_polynomial("x + y", f2);
  // Direct expansion: x^2 + 2xy + y^2, and 2 = 0 in F_2.
  EXPECT_EQ(a * a, parse_polynomial("x^2 + y^2", f2));
}

TEST(PolyArith, RingMismatch) {
  auto r1 = ring({"x", "y"});
  auto r2 = ring({"x", "z"});
  try {
    (void)(Polynomial::variable(r1, 0) + Polynomial::variable(r2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Parse, RoundTripsThroughText) {
  auto r = ring({"x", "y", "z"});
  Polynomial p = parse_polynomial("3*x^2*y - 1/2*z", r);
  EXPECT_EQ(p.to_string(), "3*x^2*y - 1/2*z");
  EXPECT_EQ(parse_polynomial(p.to_string(), r), p);
  EXPECT_EQ(parse_polynomial("(x+y)^2 - x*(x + 2*y)", r), parse_polynomial("y^2", r));
  EXPECT_THROW(parse_polynomial("x + q", r), Error);
  EXPECT_THROW(parse_polynomial("x / y", r), Error);
}

TEST(Compare, Examples) {
  auto r = ring({"x", "y", "z"});
  // grevlex: same degree, the last differing exponent (z) is smaller in x^2y.
  EXPECT_EQ(compare(r->monomial({2, 1, 0}), r->monomial({1, 1, 1}), r->order()), 1);
  auto l = ring({"x", "y"}, OrderKind::lex);
  EXPECT_EQ(compare(l->monomial({1, 0}), l->monomial({0, 9}), l->order()), 1);
  EXPECT_EQ(compare(r->monomial({1, 2, 3}), r->monomial({1, 2, 3}), r->order()), 0);
  EXPECT_THROW(compare(r->monomial({1, 0, 0}), l->monomial({1, 0}), r->order()), Error);
}

TEST(Compare, MultiplicativeOnRandomTriples) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 4);
  for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex, OrderKind::weighted_grevlex}) {
    auto r = RingSpec::make(FieldSpec::rationals(), {"a", "b", "c", "d"}, MonomialOrder{kind},
                            {1, 2, 3, 1});
    auto draw = [&] { return r->monomial({e(rng), e(rng), e(rng), e(rng)}); };
    for (int t = 0; t < 500; ++t) {
      Monomial u = draw(), v = draw(), w = draw();
      int c = r->compare(u, v);
      EXPECT_EQ(r->compare(u * w, v * w), c);
      EXPECT_EQ(r->compare(v, u), -c);
    }
  }
}

TEST(ReduceMod, Examples) {
  auto r = ring({"x", "y", "z", "u", "v", "w"});
  auto a = QuotientRing::make(r, {parse_polynomial("u*x + v*y + w*z", r)});
  EXPECT_TRUE(a->reduce(parse_polynomial("u*x + v*y + w*z", r)).is_zero());
  EXPECT_EQ(a->reduce(parse_polynomial("x", r)), parse_polynomial("x", r));
  // One division step: u*x^2 = x*(ux + vy + wz) - v*x*y - w*x*z.
  Polynomial q = parse_polynomial("u*x^2", r);
  Polynomial rel = parse_polynomial("u*x + v*y + w*z", r);
  Polynomial oracle = q - rel * parse_polynomial("x", r);
  EXPECT_EQ(oracle, parse_polynomial("-v*x*y - w*x*z", r));
  EXPECT_EQ(a->reduce(q), oracle);
}

TEST(ReduceMod, IdempotentAndLinear) {
  auto r = ring({"x", "y", "z"});
  auto a = QuotientRing::make(r, {parse_polynomial("x^2 - y*z", r), parse_polynomial("x*y", r)});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5);
  auto draw = [&] {
    std::vector<Term> terms;
    for (int k = 0; k < 5; ++k) {
      terms.push_back(Term{r->monomial({e(rng), e(rng), e(rng)}),
                           FieldElement(r->field(), static_cast<long>(c(rng)))});
    }
    return Polynomial(r, std::move(terms));
  };
  for (int t = 0; t < 50; ++t) {
    Polynomial f = draw(), g = draw();
    Polynomial rf = a->reduce(f);
    EXPECT_EQ(a->reduce(rf), rf);
    FieldElement s(r->field(), 3L);
    EXPECT_EQ(a->reduce(f.scaled(s) + g), a->reduce(f).scaled(s) + a->reduce(g));
  }
}

TEST(Homogeneity, PreservedByArithmetic) {
  auto r = RingSpec::make(FieldSpec::rationals(), {"x", "y", "z"}, MonomialOrder{}, {1, 2, 3});
  Polynomial f = parse_polynomial("x^3 + x*y + z", r);
  Polynomial g = parse_polynomial("y - x^2", r);
  ASSERT_TRUE(f.is_homogeneous());
  ASSERT_TRUE(g.is_homogeneous());
  EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE((f * g).is_homogeneous());
  EXPECT_EQ((f * g).degree(), 5);
  EXPECT_TRUE((f * f + f * parse_polynomial("z", r)).is_homogeneous());
}
