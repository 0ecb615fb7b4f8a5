#include <gtest/gtest.h>

#include "lndfilt/lnd_search.hpp"

using namespace lndfilt;

namespace {

Polynomial dp(const char* s) { return parse_polynomial(s, danielewski_params()); }
Polynomial kq(const char* s) { return parse_polynomial(s, kr2_params()); }
Polynomial np(const char* s) { return parse_polynomial(s, newfamily_p_params()); }
Polynomial nq(const char* s) { return parse_polynomial(s, newfamily_q_params()); }

std::vector<long> oracle_degrees(const FamilyInstance& inst) {
  auto deg = LndDegree::certify(inst.derivation, 64);
  std::vector<long> out;
  for (std::size_t i = 0; i < inst.ring.size(); ++i) out.push_back(deg(inst.ring.var(i)).value());
  return out;
}

}  // namespace

TEST(Danielewski, Basic) {
  auto inst = make_danielewski(2, dp("Y^2"));
  EXPECT_EQ(oracle_degrees(inst), (std::vector<long>{0, 1, 2}));
  EXPECT_EQ(inst.derivation.image(2), inst.ring.parse("2*y"));
  EXPECT_EQ(inst.derivation.image(1), inst.ring.parse("x^2"));
  EXPECT_TRUE(kernel_member(inst.derivation, inst.plinth));
  EXPECT_TRUE(inst.notes.empty());
}

TEST(Danielewski, CubicP) {
  auto inst = make_danielewski(2, dp("Y^3 + X*Y"));
  EXPECT_EQ(oracle_degrees(inst), (std::vector<long>{0, 1, 3}));
  EXPECT_TRUE(inst.ring.equal(inst.derivation.image(2), inst.ring.parse("3*y^2 + x")));
}

TEST(Danielewski, Normalization) {
  auto inst = make_danielewski(2, dp("Y^2 - 1"));
  EXPECT_FALSE(inst.notes.empty());
  EXPECT_EQ(detail::at_origin(inst.P), 0);
  EXPECT_EQ(inst.relation().evaluate({0, 0, 0}), 0);
  EXPECT_THROW(make_danielewski(2, dp("Y^2 + 1")), PreconditionError);
}

TEST(Danielewski, ParameterRanges) {
  EXPECT_THROW(make_danielewski(1, dp("Y^2")), PreconditionError);
  EXPECT_THROW(make_danielewski(2, dp("Y + X")), PreconditionError);
  EXPECT_THROW(make_danielewski(2, dp("2*Y^2")), PreconditionError);
  EXPECT_THROW(make_danielewski(2, dp("X*Y^2")), PreconditionError);
}

TEST(KorasRussell, Basic) {
  auto inst = make_koras_russell2(2, 2, 2, kq("T^2"));
  EXPECT_EQ(oracle_degrees(inst), (std::vector<long>{0, 2, 0, 1}));
  EXPECT_TRUE(is_local_slice(inst.derivation, inst.ring.var("t")));
  EXPECT_TRUE(inst.ring.equal(inst.derivation.apply(inst.ring.var("t")), inst.ring.parse("(x^2 + z^2)^2")));
  auto deg = LndDegree::certify(inst.derivation, 64);
  EXPECT_EQ(deg(inst.ring.parse("t*y")), Degree(3));
  EXPECT_THROW(make_koras_russell2(1, 2, 2, kq("T^2")), PreconditionError);
  EXPECT_THROW(make_koras_russell2(2, 2, 2, kq("T + X")), PreconditionError);
}

TEST(NewFamily, ToyReproduced) {
  auto inst = make_new_family(2, 1, np("S^2"), nq("Y^2"));
  EXPECT_TRUE(inst.ring.equal(inst.relation(), inst.ring.parse("x^2*y - (y^2 - x*z)^2")));
  EXPECT_EQ(oracle_degrees(inst), (std::vector<long>{0, 2, 4}));
  auto s = inst.slices.front();
  EXPECT_TRUE(inst.ring.equal(s, inst.ring.parse("y^2 - x*z")));
  EXPECT_TRUE(inst.ring.equal(inst.derivation.apply(s), inst.ring.parse("x^3")));
  EXPECT_EQ(LndDegree::certify(inst.derivation, 64)(s), Degree(1));
}

TEST(NewFamily, LargerParameters) {
  auto inst = make_new_family(3, 2, np("S^2 + X*S"), nq("Y^3"));
  EXPECT_EQ(oracle_degrees(inst), (std::vector<long>{0, 2, 6}));
  EXPECT_TRUE(is_locally_nilpotent(inst.derivation, 64).nilpotent());
  EXPECT_TRUE(inst.ring.equal(inst.derivation.apply(inst.slices.front()), inst.ring.parse("x^5")));
  EXPECT_THROW(make_new_family(1, 1, np("S^2"), nq("Y^2")), PreconditionError);
  EXPECT_THROW(make_new_family(2, 1, np("S"), nq("Y^2")), PreconditionError);
}

TEST(NewFamily, OriginNormalization) {
  // P(0, Q(0,0)) = 1 - 1 = 0 after absorbing the constant of Q.
  auto inst = make_new_family(2, 1, np("S^2 - 1"), nq("Y^2 + 1"));
  EXPECT_EQ(inst.relation().evaluate({0, 0, 0}), 0);
  EXPECT_EQ(detail::at_origin(inst.Q), 0);
  EXPECT_FALSE(inst.notes.empty());
}

TEST(Singularity, Examples) {
  VariableContext xyz{"X", "Y", "Z"};
  EXPECT_TRUE(singular_at_origin(parse_polynomial("X^2*Z - Y^2", xyz)));
  EXPECT_FALSE(singular_at_origin(parse_polynomial("X - Y^2", xyz)));
  EXPECT_TRUE(singular_at_origin(make_koras_russell2(2, 3, 2, kq("T^3")).relation()));
  EXPECT_THROW(singular_at_origin(parse_polynomial("X - 1", xyz)), PreconditionError);
}

TEST(Layers, FamilyFormulas) {
  std::vector<FamilyInstance> insts{make_new_family(2, 1, np("S^2"), nq("Y^2")), make_danielewski(2, dp("Y^2")),
                                    make_danielewski(3, dp("Y^3 + X*Y")), make_koras_russell2(2, 2, 2, kq("T^2"))};
  for (const auto& inst : insts) {
    Filtration f(inst.filtration_spec());
    EXPECT_TRUE(f.issues().empty()) << inst.label();
    auto mism = check_layers(f, inst.kind == FamilyKind::koras_russell2 ? 8 : 12, stated_layer_basis(inst, f));
    EXPECT_TRUE(mism.empty()) << inst.label() << ": " << (mism.empty() ? "" : mism.front());
  }
}

TEST(GradedRelations, OracleConsistentVersionsVanish) {
  std::vector<FamilyInstance> insts{make_new_family(2, 1, np("S^2"), nq("Y^2")),
                                    make_new_family(3, 2, np("S^2 + X*S"), nq("Y^3")), make_danielewski(2, dp("Y^2")),
                                    make_danielewski(3, dp("Y^3 + X*Y")), make_koras_russell2(2, 2, 2, kq("T^2"))};
  for (const auto& inst : insts) {
    Filtration f(inst.filtration_spec());
    auto rep = f.properness();
    ASSERT_EQ(rep.verdict, Properness::proper) << inst.label() << ": " << rep.reason;
    auto g = f.graded_presentation();
    for (const auto& r : stated_graded_relations(inst, g.context)) {
      EXPECT_TRUE(g.ring.is_zero(r)) << inst.label() << ": " << r;
    }
  }
}

TEST(GradedRelations, WrongCandidateDoesNotVanish) {
  // The toy relation written as X^2 Z - S^2 is not in J^.
  auto inst = make_new_family(2, 1, np("S^2"), nq("Y^2"));
  Filtration f(inst.filtration_spec());
  auto g = f.graded_presentation();
  EXPECT_FALSE(g.ring.is_zero(parse_polynomial("X^2*Z - S^2", g.context)));
}

TEST(Search, DanielewskiSurvivorsAreMultiplesOfCanonical) {
  auto inst = make_danielewski(2, dp("Y^2"));
  SearchOptions opts;
  opts.image_degree_bound = 4;
  opts.nilp_bound = 20;
  auto res = bounded_lnd_search(inst, opts);
  EXPECT_TRUE(res.canonical_in_space);
  EXPECT_EQ(res.grading_rank, 2u);
  auto surv = res.survivors();
  ASSERT_FALSE(surv.empty());
  for (const auto* c : surv) {
    EXPECT_TRUE(c->multiple_of_canonical) << c->origin << ": " << c->derivation.to_string();
  }
  for (const auto& c : res.candidates) {
    EXPECT_NO_THROW(Derivation(inst.ring, c.derivation.images()));
  }
  auto ev = ml_evidence(inst, res, 6);
  EXPECT_TRUE(ev.matches);
  EXPECT_EQ(ev.dimension, 7u);
  EXPECT_EQ(ev.predicted, "k[x]");
}

TEST(Search, ZeroAndEuler) {
  auto inst = make_danielewski(2, dp("Y^2"));
  auto [mult, f] = classify_derivation(inst, Derivation::zero(inst.ring));
  EXPECT_TRUE(mult);
  EXPECT_TRUE(f->is_zero());
  Derivation euler(inst.ring, {inst.ring.var("x"), inst.ring.var("y"), inst.ring.zero()});
  EXPECT_FALSE(is_locally_nilpotent(euler, 20).nilpotent());
  EXPECT_FALSE(classify_derivation(inst, euler).first);
  auto [m2, f2] = classify_derivation(inst, Derivation(inst.ring, {inst.ring.zero(), inst.ring.parse("x^3"),
                                                                   inst.ring.parse("2*x*y")}));
  EXPECT_TRUE(m2);
  EXPECT_EQ(*f2, inst.ring.var("x"));
}

TEST(MlEvidence, CanonicalAlone) {
  auto d = make_danielewski(2, dp("Y^2"));
  auto ev = ml_evidence(d, LndSearchResult{}, 6);
  EXPECT_TRUE(ev.matches);
  auto k = make_koras_russell2(2, 2, 2, kq("T^2"));
  auto evk = ml_evidence(k, LndSearchResult{}, 5);
  EXPECT_EQ(evk.predicted, "k[x,z]");
  EXPECT_TRUE(evk.matches);
  EXPECT_EQ(evk.dimension, 21u);
}
