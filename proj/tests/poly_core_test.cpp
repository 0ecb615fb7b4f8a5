#include <gtest/gtest.h>

#include "lndfilt/parse.hpp"
#include "lndfilt/polynomial.hpp"
#include "lndfilt/random.hpp"

using namespace lndfilt;

namespace {

const VariableContext xyz{"x", "y", "z"};
const VariableContext XYZS{"X", "Y", "Z", "S"};

Polynomial P(const char* s, const VariableContext& ctx = xyz) { return parse_polynomial(s, ctx); }

}  // namespace

TEST(PolyCore, Cancellation) {
  EXPECT_EQ(P("x+y") + P("x-y"), P("2*x"));
  EXPECT_EQ((P("x+y") + P("x-y")).size(), 1u);
  EXPECT_TRUE((P("x*y") - P("y*x")).is_zero());
}

TEST(PolyCore, BinomialSquare) {
  Polynomial s = P("y^2 - x*z");
  Polynomial sq = s * s;
  // Built term by term rather than through the parser's own power rule.
  Polynomial expected = Polynomial::from_terms(xyz, {{Monomial{0, 4, 0}, 1}, {Monomial{1, 2, 1}, -2}, {Monomial{2, 0, 2}, 1}});
  EXPECT_EQ(sq, expected);
  EXPECT_EQ(s.pow(2), expected);
}

TEST(PolyCore, ToyRelationExpansion) {
  Polynomial rel = P("X^2*Y - (Y^2 - X*Z)^2", XYZS);
  EXPECT_EQ(rel, P("X^2*Y - Y^4 + 2*X*Y^2*Z - X^2*Z^2", XYZS));
}

TEST(PolyCore, WeightedDegree) {
  WeightVector w{0, 2, 4, 1};
  EXPECT_EQ(weighted_degree(P("X^2*Y - S^2", XYZS), w), Degree(2));
  EXPECT_EQ(weighted_degree(Polynomial(XYZS), w), Degree::minus_infinity());
  EXPECT_EQ(weighted_degree(P("Y^2 - X*Z - S", XYZS), w), Degree(4));
  EXPECT_EQ(weighted_degree(P("7", XYZS), w), Degree(0));
}

TEST(PolyCore, TopForm) {
  WeightVector w{0, 2, 4, 1};
  EXPECT_EQ(top_form(P("Y^2 - X*Z - S", XYZS), w), P("Y^2 - X*Z", XYZS));
  EXPECT_EQ(top_form(P("3*X*Y^2", XYZS), w), P("3*X*Y^2", XYZS));
  EXPECT_EQ(top_form(P("X^2*Y - Y^4 + 2*X*Y^2*Z - X^2*Z^2", XYZS), w), -P("(Y^2 - X*Z)^2", XYZS));
  EXPECT_THROW(top_form(Polynomial(XYZS), w), PreconditionError);
}

TEST(PolyCore, ContextMismatch) {
  EXPECT_THROW(P("x") + P("X", XYZS), ContextMismatch);
  EXPECT_THROW(weighted_degree(P("x"), WeightVector{1, 1}), ContextMismatch);
}

TEST(PolyCore, DegreeArithmetic) {
  auto inf = Degree::minus_infinity();
  EXPECT_EQ(inf + Degree(3), inf);
  EXPECT_LT(inf, Degree(-5));
  EXPECT_EQ(max(Degree(2), inf), Degree(2));
}

TEST(PolyCore, RingAxiomsOnRandomTriples) {
  Rng rng(11);
  RandomShape shape{4, 3, 5, 3, {}};
  for (int k = 0; k < 100; ++k) {
    auto a = random_polynomial(xyz, rng, shape);
    auto b = random_polynomial(xyz, rng, shape);
    auto c = random_polynomial(xyz, rng, shape);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyCore, WeightedDegreeIsAdditiveOnProducts) {
  Rng rng(12);
  WeightVector w{0, 2, 4, 1};
  RandomShape shape{4, 3, 4, 2, {}};
  for (int k = 0; k < 200; ++k) {
    auto a = random_nonzero_polynomial(XYZS, rng, shape);
    auto b = random_nonzero_polynomial(XYZS, rng, shape);
    EXPECT_EQ(weighted_degree(a * b, w), weighted_degree(a, w) + weighted_degree(b, w));
    EXPECT_EQ(top_form(a * b, w), top_form(a, w) * top_form(b, w));
    Degree ds = weighted_degree(a + b, w);
    Degree da = weighted_degree(a, w), db = weighted_degree(b, w);
    EXPECT_LE(ds, max(da, db));
    if (da != db) EXPECT_EQ(ds, max(da, db));
  }
}

TEST(PolyCore, DerivativeAndSubstitution) {
  EXPECT_EQ(P("x^3*y + y^2").partial_derivative(0), P("3*x^2*y"));
  Polynomial s = P("y^2 - x*z");
  EXPECT_EQ(s.substitute({P("x"), P("y+1"), P("z")}, xyz), P("y^2 + 2*y + 1 - x*z"));
  EXPECT_EQ(P("x*y + 1/2").evaluate({2, 3, 0}), Rational(13, 2));
}

TEST(Parser, Precedence) {
  EXPECT_EQ(P("-x^2"), -(P("x") * P("x")));
  EXPECT_EQ(P("2*x^2*y"), P("2*(x^2)*y"));
  EXPECT_EQ(P("3/4*x"), Rational(3, 4) * P("x"));
  EXPECT_EQ(P("(x+1)/2"), Rational(1, 2) * P("x + 1"));
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_EQ(P("y^2 - x*z").to_string(), "-x*z + y^2");
  EXPECT_EQ(P("x^2/3 - 1").to_string(), "1/3*x^2 - 1");
}

TEST(Parser, Errors) {
  try {
    P("x + + ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);
  }
  EXPECT_THROW(P("x + w"), ParseError);
  EXPECT_THROW(P("x / y"), ParseError);
  EXPECT_THROW(P("x ^ -1"), ParseError);
  EXPECT_THROW(P("(x + 1"), ParseError);
  EXPECT_THROW(P("x / 0"), ParseError);
}

TEST(Parser, CaseInsensitiveFallback) {
  EXPECT_EQ(P("X*Y"), P("x*y"));
  VariableContext both{"s", "S"};
  EXPECT_EQ(parse_polynomial("S", both), Polynomial::variable(both, 1));
  EXPECT_THROW(parse_polynomial("ab", VariableContext{"Ab", "aB"}), ParseError);
}

TEST(Parser, RoundTrip) {
  Rng rng(7);
  RandomShape shape{6, 5, 20, 7, {}};
  for (int k = 0; k < 500; ++k) {
    auto p = random_polynomial(xyz, rng, shape);
    EXPECT_EQ(parse_polynomial(p.to_string(), xyz), p) << p;
  }
}
