#pragma once

// The acceptance suite: ten criteria, each a fixed computation with a pass
// flag, a one-line detail and its wall time. Shared by the acceptance test
// binary and the `selftest` subcommand.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "lndfilt/automorphisms.hpp"
#include "lndfilt/filtration.hpp"
#include "lndfilt/lnd_search.hpp"

namespace lndfilt {

struct SelftestOptions {
  std::size_t nilp_bound = 64;
  long degree_bound = 12;
  std::size_t gb_budget = kDefaultStepBudget;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime requirement
};

namespace selftest {

inline FamilyInstance toy() {
  return make_new_family(2, 1, parse_polynomial("S^2", newfamily_p_params()),
                         parse_polynomial("Y^2", newfamily_q_params()));
}
inline FamilyInstance daniel(long n, const char* P) {
  return make_danielewski(n, parse_polynomial(P, danielewski_params()));
}
inline FamilyInstance kr2() { return make_koras_russell2(2, 2, 2, parse_polynomial("T^2", kr2_params())); }

// Collects failed checks; the criterion passes when none failed.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    std::string s = std::to_string(failed_) + "/" + std::to_string(count_) + " checks failed: ";
    for (std::size_t k = 0; k < failures_.size(); ++k) s += (k ? "; " : "") + failures_[k];
    return s;
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline FiltrationOptions filtration_options(const SelftestOptions& o) {
  FiltrationOptions f;
  f.nilp_bound = o.nilp_bound;
  f.gb_budget = o.gb_budget;
  return f;
}

inline std::string c1_toy(const SelftestOptions& o, Checker& c) {
  auto inst = toy();
  const auto& r = inst.ring;
  auto deg = LndDegree::certify(inst.derivation, o.nilp_bound);
  const auto& s = inst.slices.front();
  std::vector<long> got;
  for (const auto& b : {r.var("x"), r.var("y"), r.var("z"), s}) got.push_back(deg(b).value());
  c.expect(got == std::vector<long>{0, 2, 4, 1}, "deg(x,y,z,s) wrong");
  c.expect(r.is_zero(inst.derivation.iterate(r.var("y"), 3)), "D^3(y) != 0");
  c.expect(r.is_zero(inst.derivation.iterate(r.var("z"), 5)), "D^5(z) != 0");
  c.expect(r.equal(inst.derivation.apply(s), r.parse("x^3")), "D(s) != x^3");
  return "deg(x,y,z,s) = (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," + std::to_string(got[2]) +
         "," + std::to_string(got[3]) + "), D^3 y = 0, D^5 z = 0, D s = x^3";
}

inline std::string c2_initial_ideal(const SelftestOptions& o, Checker& c) {
  auto inst = toy();
  Filtration f(inst.filtration_spec(), filtration_options(o));
  const auto& ext = f.ext_context();
  Ideal stated(ext, {parse_polynomial("X^2*Y - S^2", ext), parse_polynomial("Y^2 - X*Z", ext)});
  c.expect(same_ideal(f.J_hat(), stated, o.gb_budget), "J^ differs from <X^2Y - S^2, Y^2 - XZ>");
  auto rep = binomial_prime(f.J_hat(), o.gb_budget);
  c.expect(rep.verdict == PrimeVerdict::prime, "binomial_prime: " + to_string(rep.verdict));
  c.expect(rep.divisors == std::vector<Integer>{1, 1}, "Smith divisors are not (1,1)");
  c.expect(!rep.lattice.empty() && divisors_by_minors(rep.lattice) == rep.divisors, "minor oracle disagrees");
  return "J^ = <X^2Y - S^2, Y^2 - XZ>, prime, divisors (1,1) confirmed by minors";
}

inline std::string c3_layers(const SelftestOptions& o, Checker& c) {
  std::size_t total = 0;
  for (const auto& inst : {toy(), daniel(2, "Y^2"), daniel(3, "Y^3 + X*Y")}) {
    Filtration f(inst.filtration_spec(), filtration_options(o));
    auto mism = check_layers(f, o.degree_bound, stated_layer_basis(inst, f));
    total += mism.size();
    c.expect(mism.empty(), inst.label() + ": " + (mism.empty() ? "" : mism.front()));
  }
  return std::to_string(total) + " mismatches up to degree " + std::to_string(o.degree_bound) + " on 3 instances";
}

inline std::string c4_graded(const SelftestOptions& o, Checker& c) {
  std::size_t pairs = 0;
  std::vector<FamilyInstance> insts{toy(), daniel(2, "Y^2"), daniel(3, "Y^3 + X*Y"), kr2()};
  for (const auto& inst : insts) {
    Filtration f(inst.filtration_spec(), filtration_options(o));
    auto rep = f.properness();
    c.expect(rep.verdict == Properness::proper, inst.label() + " not proper: " + rep.reason);
    if (rep.verdict != Properness::proper) continue;
    auto g = f.graded_presentation();
    for (const auto& rel : stated_graded_relations(inst, g.context)) {
      c.expect(g.ring.is_zero(rel), inst.label() + ": " + rel.to_string() + " does not vanish");
    }
    auto gp = gr_properties_test(f, 200, o.seed);
    pairs += gp.pairs;
    c.expect(gp.ok(), inst.label() + ": " + (gp.ok() ? "" : gp.failures.front()));
  }
  return "graded relations vanish on 4 instances; P1-P4 on " + std::to_string(pairs) + " pairs";
}

inline std::string c5_axioms(const SelftestOptions& o, Checker& c) {
  std::vector<FamilyInstance> insts{toy(), daniel(2, "Y^2"), daniel(3, "Y^3 + X*Y"), kr2(),
                                    make_new_family(3, 2, parse_polynomial("S^2 + X*S", newfamily_p_params()),
                                                    parse_polynomial("Y^3", newfamily_q_params()))};
  Rng rng(o.seed);
  RandomShape shape{3, 3, 4, 1, {}};
  std::size_t pairs = 0;
  for (const auto& inst : insts) {
    auto deg = LndDegree::certify(inst.derivation, o.nilp_bound);
    const auto& r = inst.ring;
    for (int k = 0; k < 200; ++k) {
      auto a = r.normal_form(random_nonzero_polynomial(r.context(), rng, shape));
      auto b = r.normal_form(random_nonzero_polynomial(r.context(), rng, shape));
      if (a.is_zero() || b.is_zero()) continue;
      ++pairs;
      Degree da = deg(a), db = deg(b);
      c.expect(deg(a * b) == da + db, inst.label() + ": deg(ab) != deg a + deg b for " + a.to_string());
      c.expect(deg(a + b) <= max(da, db), inst.label() + ": deg(a+b) > max for " + a.to_string());
    }
  }
  return "additivity and subadditivity on " + std::to_string(pairs) + " pairs over 5 instances";
}

inline std::string c6_search(const SelftestOptions& o, Checker& c) {
  auto inst = daniel(2, "Y^2");
  SearchOptions so;
  so.image_degree_bound = 4;
  so.nilp_bound = 20;
  so.seed = o.seed;
  auto res = bounded_lnd_search(inst, so);
  auto surv = res.survivors();
  c.expect(!surv.empty(), "no locally nilpotent survivors");
  for (const auto* s : surv) c.expect(s->multiple_of_canonical, "survivor not f(x)*D: " + s->origin);
  auto ev = ml_evidence(inst, res, 6);
  c.expect(ev.matches && ev.predicted == "k[x]", "kernel intersection != k[x]");
  return std::to_string(res.unknowns) + " unknowns, " + std::to_string(res.candidates.size()) + " candidates, " +
         std::to_string(surv.size()) + " survivors all f(x)*D; kernel intersection " + ev.predicted + " (dim " +
         std::to_string(ev.dimension) + ")";
}

inline std::string c7_round_trips(const SelftestOptions& o, Checker& c) {
  Rng rng(o.seed);
  std::size_t built = 0, elements = 0;
  for (const auto& inst : {daniel(3, "Y^3 + X*Y"), toy()}) {
    auto deg = LndDegree::certify(inst.derivation, o.nilp_bound);
    for (int k = 0; k < 20; ++k) {
      auto data = random_automorphism_data(inst, rng);
      auto alpha = build_automorphism(inst, data);
      c.expect(is_verified_automorphism(alpha), inst.label() + ": " + data.to_string());
      ++built;
      auto rep = verify_degree_preservation(alpha, deg, 20, o.seed + static_cast<std::uint64_t>(k));
      elements += rep.samples;
      c.expect(rep.ok(), inst.label() + ": " + (rep.ok() ? "" : rep.failures.front()));
    }
  }
  return std::to_string(built) + " automorphisms verified with inverses; degree preserved on " +
         std::to_string(elements) + " elements";
}

inline std::string c8_iso(const SelftestOptions&, Checker& c) {
  auto a = daniel(2, "Y^2 + X"), b = daniel(2, "Y^2 + 2*X"), z = daniel(2, "Y^2");
  auto ab = iso_decide(a, b), ba = iso_decide(b, a);
  c.expect(ab.verdict == IsoVerdict::isomorphic, "Y^2+X vs Y^2+2X: " + ab.reason);
  if (ab.witness) {
    c.expect(check_morphism(*ab.witness) && check_inverse(*ab.witness, *ab.witness->inverse()),
             "witness failed composition check");
  }
  c.expect(ba.verdict == ab.verdict, "not symmetric");
  auto az = iso_decide(a, z), za = iso_decide(z, a);
  c.expect(az.verdict == IsoVerdict::not_isomorphic, "Y^2+X vs Y^2: " + to_string(az.verdict));
  c.expect(za.verdict == az.verdict, "not symmetric");
  return "Y^2+X ~ Y^2+2X (" + ab.reason + "); Y^2+X vs Y^2 " + to_string(az.verdict) + "; symmetric";
}

inline std::string c9_conjugation(const SelftestOptions& o, Checker& c) {
  auto inst = daniel(2, "Y^2");
  auto alpha = build_auto_danielewski(inst, {3, 2, parse_polynomial("1", a_context())});
  auto da = conjugate(inst.derivation, alpha);
  auto deg = LndDegree::certify(inst.derivation, o.nilp_bound);
  auto dega = LndDegree::certify(da, o.nilp_bound);
  Rng rng(o.seed);
  RandomShape shape{3, 3, 4, 1, {}};
  for (int k = 0; k < 20; ++k) {
    auto b = random_nonzero_polynomial(inst.ring.context(), rng, shape);
    c.expect(dega(b) == deg(alpha(b)), "fails on " + b.to_string());
  }
  return "deg_{D_alpha}(b) = deg_D(alpha(b)) on 20 elements, alpha = (3x, 2y + x^2, ...)";
}

inline std::string c10_parser(const SelftestOptions& o, Checker& c) {
  VariableContext ctx{"x", "y", "z", "s"};
  Rng rng(o.seed);
  RandomShape shape{6, 5, 20, 7, {}};
  for (int k = 0; k < 500; ++k) {
    auto p = random_polynomial(ctx, rng, shape);
    c.expect(parse_polynomial(p.to_string(), ctx) == p, "round trip fails on " + p.to_string());
  }
  return "500 random polynomials round-trip";
}

}  // namespace selftest

inline std::vector<CriterionResult> run_selftest(const SelftestOptions& opts = {},
                                                 const std::function<void(const CriterionResult&)>& on_result = {}) {
  using Fn = std::string (*)(const SelftestOptions&, selftest::Checker&);
  struct Item {
    const char* title;
    Fn fn;
    double limit;
  };
  const Item items[] = {
      {"toy example degrees and iterates", selftest::c1_toy, 1.0},
      {"initial ideal and binomial primality", selftest::c2_initial_ideal, 5.0},
      {"filtration layer equality", selftest::c3_layers, 0},
      {"graded relations and P1-P4", selftest::c4_graded, 0},
      {"degree-function axioms", selftest::c5_axioms, 0},
      {"bounded LND search", selftest::c6_search, 60.0},
      {"automorphism round trips", selftest::c7_round_trips, 0},
      {"isomorphism decision", selftest::c8_iso, 0},
      {"conjugation identity", selftest::c9_conjugation, 0},
      {"parser round trip and criteria 1-9", selftest::c10_parser, 0},
  };
  std::vector<CriterionResult> out;
  for (std::size_t k = 0; k < std::size(items); ++k) {
    CriterionResult r;
    r.id = static_cast<int>(k + 1);
    r.title = items[k].title;
    r.limit_seconds = items[k].limit;
    selftest::Checker c;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    try {
      detail = items[k].fn(opts, c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.id == 10) {
      for (const auto& prev : out) c.expect(prev.passed, "criterion " + std::to_string(prev.id) + " failed");
    }
    r.passed = c.ok() && (r.limit_seconds == 0 || r.seconds < r.limit_seconds);
    r.detail = c.summary(detail);
    if (c.ok() && !r.passed) r.detail += " (runtime over limit)";
    out.push_back(r);
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace lndfilt
