#include <gtest/gtest.h>

#include "lndfilt/filtration.hpp"

using namespace lndfilt;

namespace {

const VariableContext xyz{"x", "y", "z"};

RingPresentation toy_ring() { return RingPresentation(xyz, {parse_polynomial("x^2*y - (y^2 - x*z)^2", xyz)}); }

Derivation toy_partial() {
  auto ring = toy_ring();
  auto s = ring.parse("y^2 - x*z");
  return Derivation(ring, {ring.zero(), 2 * ring.var("x") * s, 4 * ring.var("y") * s - ring.parse("x^2")});
}

Filtration toy_filtration(const char* slice = "y^2 - x*z") {
  auto d = toy_partial();
  const auto& ring = d.ring();
  return Filtration(FiltrationSpec{d, {ring.var("x")}, {ring.parse(slice)}, {0, 2, 4}, {}, {}});
}

Filtration danielewski_2() {
  RingPresentation ring(xyz, {parse_polynomial("x^2*z - y^2", xyz)});
  Derivation d(ring, {ring.zero(), ring.parse("x^2"), ring.parse("2*y")});
  return Filtration(FiltrationSpec{d, {ring.var("x")}, {ring.var("y")}, {0, 1, 2}, {}, {}});
}

Polynomial E(const Filtration& f, const char* s) { return parse_polynomial(s, f.ext_context()); }

}  // namespace

TEST(Filtration, ToyExtendedRing) {
  auto f = toy_filtration();
  EXPECT_TRUE(f.issues().empty());
  EXPECT_EQ(f.ext_context().names(), (std::vector<std::string>{"X", "Y", "Z", "S"}));
  EXPECT_EQ(f.weights(), (WeightVector{0, 2, 4, 1}));
  EXPECT_TRUE(same_ideal(f.J_hat(), Ideal(f.ext_context(), {E(f, "X^2*Y - S^2"), E(f, "Y^2 - X*Z")})));
}

TEST(Filtration, CandidateLayers) {
  auto f = toy_filtration();
  auto mons = [&](const std::vector<Monomial>& ms) {
    std::vector<Polynomial> out;
    for (const auto& m : ms) out.push_back(Polynomial::monomial(f.ext_context(), m));
    return out;
  };
  EXPECT_EQ(mons(f.candidate_layer(0).reduced), (std::vector<Polynomial>{E(f, "1")}));
  EXPECT_EQ(mons(f.candidate_layer(1).reduced), (std::vector<Polynomial>{E(f, "1"), E(f, "S")}));
  auto r4 = mons(f.candidate_layer(4).reduced);
  EXPECT_EQ(r4, (std::vector<Polynomial>{E(f, "1"), E(f, "S"), E(f, "Y"), E(f, "S*Y"), E(f, "Z")}));
  EXPECT_EQ(f.candidate_layer(4).raw.size(), 10u);
}

TEST(Filtration, ToyProper) {
  auto f = toy_filtration();
  auto rep = f.properness();
  EXPECT_EQ(rep.verdict, Properness::proper) << rep.reason;
  EXPECT_EQ(rep.primality.verdict, PrimeVerdict::prime);
  EXPECT_EQ(rep.primality.divisors, (std::vector<Integer>{1, 1}));
  EXPECT_FALSE(rep.witness.has_value());
}

TEST(Filtration, WrongSliceIsImproper) {
  auto f = toy_filtration("z");
  EXPECT_FALSE(f.issues().empty());
  auto rep = f.properness();
  EXPECT_EQ(rep.verdict, Properness::improper);
  ASSERT_TRUE(rep.witness.has_value());
  const auto& w = *rep.witness;
  EXPECT_TRUE(w.omega_a != w.deg_a || w.omega_b != w.deg_b || w.omega_ab != w.deg_ab);
  EXPECT_THROW(f.graded_presentation(), PreconditionError);
}

TEST(Filtration, DanielewskiGraded) {
  auto f = danielewski_2();
  EXPECT_EQ(f.properness().verdict, Properness::proper);
  auto g = f.graded_presentation();
  EXPECT_EQ(g.degrees, (WeightVector{0, 1, 2}));
  EXPECT_TRUE(same_ideal(Ideal(g.context, g.relations), Ideal(g.context, {E(f, "X^2*Z - Y^2")})));
}

TEST(Gr, ToyValues) {
  auto f = toy_filtration();
  const auto& ring = f.ring();
  auto g = f.gr(ring.parse("y^2"));
  EXPECT_EQ(g.degree, Degree(4));
  EXPECT_EQ(f.graded_normal_form(g.value), f.graded_normal_form(E(f, "X*Z")));
  EXPECT_EQ(f.gr(ring.constant(3)).value, E(f, "3"));
  EXPECT_EQ(f.gr(ring.constant(3)).degree, Degree(0));
  auto r = f.gr(ring.parse("x^2*y"));
  EXPECT_EQ(r.degree, Degree(2));
  EXPECT_EQ(f.graded_normal_form(r.value), f.graded_normal_form(E(f, "S^2")));
  EXPECT_TRUE(f.gr(ring.zero()).value.is_zero());
}

TEST(Gr, PropertiesOnSelectedPairs) {
  auto f = toy_filtration();
  const auto& ring = f.ring();
  auto nf = [&](const Polynomial& p) { return f.graded_normal_form(p); };
  EXPECT_EQ(nf(f.gr(ring.parse("y*z")).value), nf(E(f, "Y*Z")));
  EXPECT_EQ(f.gr(ring.parse("z + x")).value, E(f, "Z"));
  // y^2 and -xz both have degree 4, their sum s has degree 1.
  EXPECT_TRUE(nf(f.gr(ring.parse("y^2")).value + f.gr(ring.parse("-x*z")).value).is_zero());
  EXPECT_EQ(f.gr(ring.parse("y^2 - x*z")).degree, Degree(1));
}

TEST(Gr, DegreeAgreesWithOracle) {
  auto f = toy_filtration();
  Rng rng(8);
  RandomShape shape{4, 3, 4, 1, {}};
  for (int k = 0; k < 40; ++k) {
    auto b = random_nonzero_polynomial(xyz, rng, shape);
    EXPECT_EQ(f.gr(b).degree, f.degree()(b)) << b;
  }
}

TEST(Induced, Toy) {
  auto f = toy_filtration();
  auto ind = f.induced_derivation(f.derivation());
  EXPECT_EQ(ind.degree, Degree(-1));
  const auto& bar = ind.derivation;
  EXPECT_TRUE(bar.image(0).is_zero());
  EXPECT_EQ(bar.image(3), bar.ring().normal_form(E(f, "X^3")));
  EXPECT_EQ(bar.image(1), bar.ring().normal_form(E(f, "2*X*S")));
  EXPECT_EQ(bar.image(2), bar.ring().normal_form(E(f, "4*Y*S")));
  EXPECT_TRUE(is_locally_nilpotent(bar, 64).nilpotent());
  auto zero = f.induced_derivation(Derivation::zero(f.ring()));
  EXPECT_TRUE(zero.derivation.is_zero());
  EXPECT_TRUE(zero.degree.is_minus_infinity());
}

TEST(Induced, Danielewski) {
  auto f = danielewski_2();
  auto ind = f.induced_derivation(f.derivation());
  EXPECT_EQ(ind.degree, Degree(-1));
  EXPECT_EQ(ind.derivation.image(1), ind.derivation.ring().normal_form(E(f, "X^2")));
  EXPECT_EQ(ind.derivation.image(2), ind.derivation.ring().normal_form(E(f, "2*Y")));
}

TEST(Layers, ToyStatedFormula) {
  auto f = toy_filtration();
  // F_{4i+2j+l} = k[x] s^l y^j z^i + F_{4i+2j+l-1}, j, l in {0, 1}.
  auto stated = [&](long r) -> std::optional<Polynomial> {
    long i = r / 4, j = (r % 4) / 2, l = r % 2;
    return Polynomial::monomial(f.ext_context(), Monomial{0, static_cast<Exponent>(j), static_cast<Exponent>(i),
                                                          static_cast<Exponent>(l)});
  };
  EXPECT_TRUE(check_layers(f, 12, stated).empty());
  // A wrong statement is caught.
  auto wrong = [&](long r) -> std::optional<Polynomial> {
    return Polynomial::monomial(f.ext_context(), Monomial{0, 0, 0, static_cast<Exponent>(r)});
  };
  EXPECT_FALSE(check_layers(f, 6, wrong).empty());
}

TEST(Gr, PropertiesOnRandomPairs) {
  for (const auto& f : {toy_filtration(), danielewski_2()}) {
    auto rep = gr_properties_test(f, 200, 4);
    EXPECT_TRUE(rep.ok()) << rep.failures.front();
    EXPECT_GT(rep.checks[0], 150u);
    EXPECT_GT(rep.checks[1], 0u);
    EXPECT_GT(rep.checks[2], 0u);
    EXPECT_GT(rep.checks[3], 0u);
  }
}
