#include <gtest/gtest.h>

#include <numeric>

#include "lndfilt/groebner.hpp"
#include "lndfilt/lattice.hpp"
#include "lndfilt/linear_algebra.hpp"
#include "lndfilt/parse.hpp"
#include "lndfilt/random.hpp"

using namespace lndfilt;

namespace {

const VariableContext xy{"x", "y"};
const VariableContext XYZS{"X", "Y", "Z", "S"};
const VariableContext XYZ{"X", "Y", "Z"};

Polynomial P(const char* s, const VariableContext& ctx) { return parse_polynomial(s, ctx); }

Ideal toy_J() {
  return Ideal(XYZS, {P("X^2*Y - (Y^2 - X*Z)^2", XYZS), P("Y^2 - X*Z - S", XYZS)});
}

}  // namespace

TEST(Groebner, PrincipalMonomial) {
  auto gb = groebner_basis(Ideal(xy, {P("x", xy)}), MonomialOrder::lex());
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P("x", xy));
}

TEST(Groebner, MonomialPairIsAlreadyABasis) {
  auto gb = groebner_basis(Ideal(xy, {P("x^2", xy), P("x*y", xy)}), MonomialOrder::grlex());
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("x^2", xy));
  EXPECT_EQ(gb[1], P("x*y", xy));
}

TEST(Groebner, ClassicalCyclicExample) {
  // <x^2 - y, x^3 - x> under lex x > y: reduced basis {x^2 - y, x*y - x, y^2 - y}.
  auto gb = groebner_basis(Ideal(xy, {P("x^2 - y", xy), P("x^3 - x", xy)}), MonomialOrder::lex());
  std::vector<Polynomial> expected{P("x^2 - y", xy), P("x*y - x", xy), P("y^2 - y", xy)};
  EXPECT_EQ(gb, expected);
}

TEST(Groebner, ToyMembership) {
  Ideal J = toy_J();
  EXPECT_TRUE(normal_form(P("X^2*Y - S^2", XYZS), J, MonomialOrder::grlex()).is_zero());
  EXPECT_TRUE(contains(J, P("X^2*Y - S^2", XYZS)));
  EXPECT_FALSE(contains(J, P("X^2*Y", XYZS)));
  // Cofactor certificate: X^2Y - S^2 = g1 + (Y^2-XZ+S)*g2.
  Polynomial g1 = J.generators()[0], g2 = J.generators()[1];
  EXPECT_EQ(P("X^2*Y - S^2", XYZS), g1 + P("Y^2 - X*Z + S", XYZS) * g2);
}

TEST(Groebner, NormalFormInQuotient) {
  Ideal I(XYZ, {P("X^2*Y - (Y^2 - X*Z)^2", XYZ)});
  auto ord = MonomialOrder::grlex();
  Polynomial a = normal_form(P("X^2*Y", XYZ), I, ord);
  Polynomial b = normal_form(P("(Y^2 - X*Z)^2", XYZ), I, ord);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(normal_form(I.generators()[0], I, ord).is_zero());
  // s^2 and x^2 y agree modulo J.
  Ideal J = toy_J();
  EXPECT_EQ(normal_form(P("S^2", XYZS), J, ord), normal_form(P("X^2*Y", XYZS), J, ord));
}

TEST(Groebner, NormalFormIsLinearAndIdempotent) {
  Ideal J = groebner(toy_J(), MonomialOrder::grlex());
  const auto* gb = J.basis();
  ASSERT_NE(gb, nullptr);
  Rng rng(3);
  RandomShape shape{5, 5, 5, 2, {}};
  for (int k = 0; k < 50; ++k) {
    auto a = random_polynomial(XYZS, rng, shape);
    auto b = random_polynomial(XYZS, rng, shape);
    Rational c = random_rational(rng, 7, 3);
    auto na = gb->reduce(a), nb = gb->reduce(b);
    EXPECT_EQ(gb->reduce(na), na);
    EXPECT_EQ(gb->reduce(a + c * b), na + c * nb);
    EXPECT_TRUE(gb->reduce(a * J.generators()[1]).is_zero());
  }
}

TEST(Groebner, BudgetExhaustion) {
  EXPECT_THROW(groebner_basis(toy_J(), MonomialOrder::lex(), 3), BudgetExhausted);
}

TEST(Groebner, OrderCompatibleWithMultiplication) {
  Rng rng(5);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grlex(),
                                    MonomialOrder::weight_refined(WeightVector{0, 2, 4, 1}, {1, 2, 3, 0}),
                                    MonomialOrder::elimination(4, {3})};
  for (const auto& ord : orders) {
    for (int k = 0; k < 100; ++k) {
      auto a = random_monomial(XYZS, rng, 4, {0, 1, 2, 3});
      auto b = random_monomial(XYZS, rng, 4, {0, 1, 2, 3});
      auto c = random_monomial(XYZS, rng, 4, {0, 1, 2, 3});
      EXPECT_EQ(ord.compare(a, b), ord.compare(a * c, b * c));
      EXPECT_GE(ord.compare(a * c, a), 0);
      EXPECT_EQ(ord.compare(a, b) == 0, a == b);
    }
  }
}

TEST(Elimination, Basics) {
  VariableContext TXY{"T", "X", "Y"};
  Ideal I(TXY, {P("Y - X^2", TXY), P("T - X", TXY)});
  EXPECT_EQ(eliminate(I, {}).generators(), I.generators());
  EXPECT_TRUE(same_ideal(eliminate(I, {0}), Ideal(TXY, {P("Y - X^2", TXY)})));
  EXPECT_TRUE(eliminate(Ideal(TXY, {P("T*X - 1", TXY)}), {0}).is_zero());
}

TEST(Saturation, Basics) {
  EXPECT_TRUE(same_ideal(saturate(Ideal(xy, {P("x*y", xy)}), P("x", xy)), Ideal(xy, {P("y", xy)})));
  EXPECT_TRUE(same_ideal(saturate(Ideal(xy, {P("x^2", xy)}), P("x", xy)), Ideal(xy, {P("1", xy)})));
  Ideal hat(XYZS, {P("X^2*Y - S^2", XYZS), P("Y^2 - X*Z", XYZS)});
  EXPECT_TRUE(same_ideal(saturate(hat, P("X*Y*Z*S", XYZS)), hat));
  EXPECT_THROW(saturate(hat, Polynomial(XYZS)), PreconditionError);
}

TEST(InitialIdeal, Toy) {
  Ideal hat = initial_ideal(toy_J(), WeightVector{0, 2, 4, 1});
  EXPECT_TRUE(same_ideal(hat, Ideal(XYZS, {P("X^2*Y - S^2", XYZS), P("Y^2 - X*Z", XYZS)})));
  for (const auto& g : hat.generators()) EXPECT_TRUE(is_homogeneous(g, WeightVector{0, 2, 4, 1}));
}

TEST(InitialIdeal, HomogeneousFixedPoint) {
  Ideal I(XYZ, {P("X^2*Z - Y^3", XYZ)});
  EXPECT_TRUE(same_ideal(initial_ideal(I, WeightVector{0, 1, 3}), I));
}

TEST(InitialIdeal, Danielewski) {
  // n=3, P = Y^2 + X*Y: slice is Y itself, weights (0, 1, 2).
  Ideal J(XYZ, {P("X^3*Z - Y^2 - X*Y", XYZ)});
  EXPECT_TRUE(same_ideal(initial_ideal(J, WeightVector{0, 1, 2}), Ideal(XYZ, {P("X^3*Z - Y^2", XYZ)})));
}

TEST(InitialIdeal, TopFormsOfRandomElementsLieInIt) {
  WeightVector w{0, 2, 4, 1};
  Ideal J = toy_J();
  Ideal hat = initial_ideal(J, w);
  Rng rng(9);
  RandomShape shape{3, 2, 4, 1, {}};
  for (int k = 0; k < 30; ++k) {
    Polynomial f = random_nonzero_polynomial(XYZS, rng, shape) * J.generators()[0] +
                   random_nonzero_polynomial(XYZS, rng, shape) * J.generators()[1];
    if (f.is_zero()) continue;
    EXPECT_TRUE(contains(hat, top_form(f, w)));
  }
}

TEST(Smith, MatchesMinorOracle) {
  Rng rng(21);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int k = 0; k < 60; ++k) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix a(r, std::vector<Integer>(c));
    for (auto& row : a) {
      for (auto& v : row) v = entry(rng);
    }
    auto f = smith_normal_form(a);
    EXPECT_EQ(f.divisors, divisors_by_minors(a));
    EXPECT_EQ(multiply(multiply(f.U, a), f.V), f.S);
    for (std::size_t i = 1; i < f.divisors.size(); ++i) EXPECT_EQ(f.divisors[i] % f.divisors[i - 1], 0);
  }
}

TEST(BinomialPrime, Toy) {
  Ideal hat(XYZS, {P("X^2*Y - S^2", XYZS), P("Y^2 - X*Z", XYZS)});
  auto rep = binomial_prime(hat);
  EXPECT_EQ(rep.verdict, PrimeVerdict::prime);
  EXPECT_EQ(rep.divisors, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(divisors_by_minors({{2, 1, 0, -2}, {-1, 2, -1, 0}}), (std::vector<Integer>{1, 1}));
}

TEST(BinomialPrime, Verdicts) {
  EXPECT_EQ(binomial_prime(Ideal(xy, {P("x^2 - y^2", xy)})).verdict, PrimeVerdict::not_prime);
  EXPECT_EQ(binomial_prime(Ideal(XYZ, {P("X^2*Z - Y^3", XYZ)})).verdict, PrimeVerdict::prime);
  EXPECT_EQ(binomial_prime(Ideal(XYZ, {P("X^2*Z - Y^2", XYZ)})).verdict, PrimeVerdict::prime);
  EXPECT_EQ(binomial_prime(Ideal(xy, {P("x^2 - 2*y", xy)})).verdict, PrimeVerdict::inapplicable);
  EXPECT_EQ(binomial_prime(Ideal(xy, {P("x*y - x", xy), P("x^2", xy)})).verdict, PrimeVerdict::inapplicable);
  EXPECT_EQ(binomial_prime(Ideal(xy, {P("x*y - x^2", xy)})).verdict, PrimeVerdict::not_prime);
  EXPECT_EQ(binomial_prime(Ideal(xy, {P("1", xy)})).verdict, PrimeVerdict::not_prime);
  EXPECT_EQ(binomial_prime(Ideal(xy)).verdict, PrimeVerdict::prime);
}

TEST(LinearAlgebra, NullspaceAndSolve) {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  auto ns = nullspace(a, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : a) {
    Rational dot = 0;
    for (std::size_t i = 0; i < 3; ++i) dot += row[i] * ns[0][i];
    EXPECT_EQ(dot, 0);
  }
  EXPECT_EQ(rank(a, 3), 2u);
  auto x = solve(a, {1, 2, 0}, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(solve(a, {1, 3, 0}, 3).has_value());
}
