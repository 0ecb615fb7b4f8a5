#pragma once

// Automorphisms of Danielewski surfaces and of the new family with
// Q = Y^m, the isomorphism decision between Danielewski surfaces, and the
// degree-preservation check. Everything constructed here is verified by
// composition before it is returned.
//
// The congruence conditions on (lambda, mu) are systems lambda^p mu^q = c.
// They are solved exactly over Q through the Smith form of the exponent
// matrix; when a root is missing in Q the residual conditions are reported.

#include <optional>
#include <string>
#include <vector>

#include "lndfilt/families.hpp"
#include "lndfilt/lattice.hpp"
#include "lndfilt/morphism.hpp"

namespace lndfilt {

inline const VariableContext& a_context() {
  static const VariableContext ctx{"x"};
  return ctx;
}

struct AutomorphismData {
  Rational lambda = 1;
  Rational mu = 1;
  Polynomial a = Polynomial(a_context());  // polynomial in x

  std::string to_string() const {
    return "lambda=" + lndfilt::to_string(lambda) + ", mu=" + lndfilt::to_string(mu) + ", a=" + a.to_string();
  }
};

// lambda^p * mu^q = c.
struct MultEquation {
  long p = 0, q = 0;
  Rational c = 1;
  std::string origin;
};

enum class MultStatus { solvable, infeasible, needs_extension };

struct MultSolution {
  MultStatus status = MultStatus::solvable;
  std::string reason;                   // infeasibility or residual conditions
  IntMatrix V;                          // (lambda, mu) = w^V, row k of V for variable k
  std::vector<Rational> fixed;          // w_t for t < rank
  std::size_t rank = 0;

  // lambda, mu for the given values of the free w_t (t >= rank).
  std::pair<Rational, Rational> point(const std::vector<Rational>& free = {}) const {
    std::vector<Rational> w = fixed;
    for (std::size_t t = rank; t < 2; ++t) w.push_back(t - rank < free.size() ? free[t - rank] : Rational(1));
    Rational lam = 1, mu = 1;
    for (std::size_t t = 0; t < 2; ++t) {
      lam *= pow(w[t], V[0][t].get_si());
      mu *= pow(w[t], V[1][t].get_si());
    }
    return {lam, mu};
  }
};

namespace detail {

inline std::string power_text(const char* base, long e) {
  if (e == 0) return "";
  return std::string(base) + (e == 1 ? "" : "^" + std::to_string(e));
}

inline std::string monomial_text(long p, long q) {
  std::string a = power_text("lambda", p), b = power_text("mu", q);
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace detail

inline MultSolution solve_multiplicative(const std::vector<MultEquation>& eqs) {
  MultSolution sol;
  if (eqs.empty()) {
    sol.V = identity_matrix(2);
    return sol;
  }
  IntMatrix A;
  for (const auto& e : eqs) A.push_back({Integer(e.p), Integer(e.q)});
  auto snf = smith_normal_form(A);
  sol.V = snf.V;
  sol.rank = snf.divisors.size();
  // c'_r = prod_s c_s^{U[r][s]}
  std::vector<Rational> cp;
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    Rational v = 1;
    for (std::size_t s = 0; s < eqs.size(); ++s) {
      if (snf.U[r][s] != 0) v *= pow(eqs[s].c, snf.U[r][s].get_si());
    }
    cp.push_back(v);
  }
  for (std::size_t r = sol.rank; r < eqs.size(); ++r) {
    if (cp[r] != 1) {
      sol.status = MultStatus::infeasible;
      sol.reason = "the conditions are inconsistent: a product of them forces 1 = " + to_string(cp[r]);
      return sol;
    }
  }
  // w = (lambda, mu)^{V^-1}; V is unimodular 2x2.
  Integer det = sol.V[0][0] * sol.V[1][1] - sol.V[0][1] * sol.V[1][0];
  IntMatrix Vinv{{sol.V[1][1] * det, -sol.V[0][1] * det}, {-sol.V[1][0] * det, sol.V[0][0] * det}};
  std::vector<std::string> residual;
  for (std::size_t t = 0; t < sol.rank; ++t) {
    unsigned long s = snf.divisors[t].get_ui();
    auto root = exact_root(cp[t], s);
    if (!root) {
      long p = Vinv[t][0].get_si() * static_cast<long>(s), q = Vinv[t][1].get_si() * static_cast<long>(s);
      residual.push_back(detail::monomial_text(p, q) + " = " + to_string(cp[t]));
      sol.fixed.push_back(1);
    } else {
      sol.fixed.push_back(*root);
    }
  }
  if (!residual.empty()) {
    sol.status = MultStatus::needs_extension;
    for (std::size_t k = 0; k < residual.size(); ++k) sol.reason += (k ? "; " : "") + residual[k];
  }
  return sol;
}

inline bool satisfies(const std::vector<MultEquation>& eqs, const Rational& lambda, const Rational& mu) {
  for (const auto& e : eqs) {
    if (pow(lambda, e.p) * pow(mu, e.q) != e.c) return false;
  }
  return true;
}

namespace detail {

// Coefficient equations for f_{top-i}(lambda X) = mu^i g_{top-i}(X) mod X^modulus,
// i = 1..top, where P1 = sum f_k(X) V^k and P2 = sum g_k(X) V^k are
// polynomials in (X, V). Returns an infeasibility message, if any.
inline std::optional<std::string> congruence_equations(const Polynomial& P1, const Polynomial& P2, long top,
                                                        long modulus, const char* fname, const char* gname,
                                                        std::vector<MultEquation>& out) {
  auto f = P1.coefficients_in(1), g = P2.coefficients_in(1);
  auto coeff = [](const std::vector<Polynomial>& v, long k, long j) -> Rational {
    if (k < 0 || k >= static_cast<long>(v.size())) return 0;
    return v[static_cast<std::size_t>(k)].coefficient(Monomial{static_cast<Exponent>(j), 0});
  };
  for (long i = 1; i <= top; ++i) {
    for (long j = 0; j < modulus; ++j) {
      Rational F = coeff(f, top - i, j), G = coeff(g, top - i, j);
      if (F == 0 && G == 0) continue;
      std::string where = "i=" + std::to_string(i) + ", coefficient of x^" + std::to_string(j);
      if (F == 0 || G == 0) {
        return "congruence " + std::string(fname) + "_" + std::to_string(top - i) + "(lambda x) = mu^" +
               std::to_string(i) + " " + gname + "_" + std::to_string(top - i) + "(x) mod x^" +
               std::to_string(modulus) + " fails at " + where + ": " + to_string(F) + " vs " + to_string(G) +
               " (lambda, mu are nonzero)";
      }
      out.push_back({j, -i, G / F, where});
    }
  }
  return std::nullopt;
}

inline Polynomial a_in(const AutomorphismData& d, const VariableContext& ctx, std::size_t xvar) {
  return d.a.substitute({Polynomial::variable(ctx, xvar)}, ctx);
}

inline RingPresentation danielewski_ring(long n, const Polynomial& P) {
  VariableContext ctx{"x", "y", "z"};
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  return RingPresentation(ctx, {x.pow(static_cast<unsigned long>(n)) * z - P.substitute({x, y}, ctx)});
}

// Psi(x1, y1, z1) = (lambda x2, mu y2 + x2^n a(x2),
//   (mu^m / lambda^n) z2 + (P1(lambda x2, mu y2 + x2^n a) - mu^m P2(x2, y2)) / (lambda^n x2^n)).
inline RingMorphism danielewski_map(const RingPresentation& src, const RingPresentation& tgt, const Polynomial& P1,
                                    const Polynomial& P2, long n, long m, const AutomorphismData& d) {
  const auto& ctx = tgt.context();
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  Polynomial xn = x.pow(static_cast<unsigned long>(n));
  Polynomial ay = d.mu * y + xn * a_in(d, ctx, 0);
  Polynomial num = P1.substitute({d.lambda * x, ay}, ctx) - pow(d.mu, m) * P2.substitute({x, y}, ctx);
  auto q = exact_quotient(num, pow(d.lambda, n) * xn);
  if (!q) throw Error("internal: z-image numerator is not divisible by lambda^n x^n (" + d.to_string() + ")");
  Polynomial az = pow(d.mu, m) / pow(d.lambda, n) * z + *q;
  return RingMorphism(src, tgt, {d.lambda * x, ay, az});
}

// a' with alpha(alpha'(v)) = v on the slice coordinate, solved coefficient by
// coefficient: mu' = 1/mu and lambda^(k+j) a'_j = -a_j / mu.
inline AutomorphismData inverse_data(const AutomorphismData& d, long k) {
  std::vector<Term> terms;
  for (const auto& t : d.a.terms()) {
    long j = t.monomial[0];
    terms.push_back({t.monomial, -t.coeff / (d.mu * pow(d.lambda, k + j))});
  }
  return {1 / d.lambda, 1 / d.mu, Polynomial::from_terms(a_context(), std::move(terms))};
}

// Y -> Y - f_{m-1}(X)/m removes the Y^{m-1} coefficient. Returns the
// normalized P and the shift g = f_{m-1}/m (a polynomial in X, Y context).
inline std::pair<Polynomial, Polynomial> tschirnhaus(const Polynomial& P, long m) {
  const auto& ctx = P.context();
  auto cs = P.coefficients_in(1);
  Polynomial g = Rational(1, static_cast<unsigned long>(m)) * cs[static_cast<std::size_t>(m - 1)];
  if (g.is_zero()) return {P, g};
  Polynomial shifted = P.substitute({Polynomial::variable(ctx, 0), Polynomial::variable(ctx, 1) - g}, ctx);
  return {shifted, g};
}

struct DanielewskiNormal {
  Polynomial P;           // with f_{m-1} = 0
  RingPresentation ring;  // Q[x,y,z]/(x^n z - P)
  std::optional<std::pair<RingMorphism, RingMorphism>> change;  // tau: B -> B', tau^-1
};

inline DanielewskiNormal danielewski_normal(const FamilyInstance& inst) {
  if (inst.kind != FamilyKind::danielewski) throw PreconditionError("expected a Danielewski instance");
  auto [Pn, g] = tschirnhaus(inst.P, inst.m);
  if (g.is_zero()) return {inst.P, inst.ring, std::nullopt};
  RingPresentation ring = danielewski_ring(inst.n, Pn);
  const auto& c = inst.ring.context();
  Polynomial gx = g.substitute({Polynomial::variable(c, 0), Polynomial(c)}, c);
  RingMorphism tau(inst.ring, ring, {ring.var(0), ring.var(1) - gx, ring.var(2)});
  RingMorphism back(ring, inst.ring, {inst.ring.var(0), inst.ring.var(1) + gx, inst.ring.var(2)});
  return {Pn, ring, std::make_pair(tau, back)};
}

inline std::vector<MultEquation> danielewski_equations(const FamilyInstance& inst, const Polynomial& Pn,
                                                       std::optional<std::string>* infeasible) {
  std::vector<MultEquation> eqs;
  auto msg = congruence_equations(Pn, Pn, inst.m, inst.n, "f", "f", eqs);
  if (infeasible) *infeasible = msg;
  return eqs;
}

inline std::vector<MultEquation> newfamily_equations(const FamilyInstance& inst) {
  std::vector<MultEquation> eqs;
  congruence_equations(inst.P, inst.P, inst.d, inst.n + inst.e, "f", "f", eqs);
  eqs.push_back({-inst.n * inst.m, inst.d * inst.m - 1, 1, "mu^(dm) / lambda^(nm) = mu"});
  return eqs;
}

inline void require_equations(const std::vector<MultEquation>& eqs, const AutomorphismData& d) {
  for (const auto& e : eqs) {
    if (pow(d.lambda, e.p) * pow(d.mu, e.q) != e.c) {
      throw PreconditionError("automorphism data violates " + detail::monomial_text(e.p, e.q) + " = " +
                              to_string(e.c) + " (" + e.origin + ")");
    }
  }
}

}  // namespace detail

// alpha(x, y, z) = (lambda x, mu y + x^n a(x), ...) on the f_{m-1} = 0
// normal form, transported back when the instance needed the translation.
inline RingMorphism build_auto_danielewski(const FamilyInstance& inst, const AutomorphismData& data) {
  if (data.lambda == 0 || data.mu == 0) throw PreconditionError("lambda and mu must be nonzero");
  auto norm = detail::danielewski_normal(inst);
  std::optional<std::string> bad;
  auto eqs = detail::danielewski_equations(inst, norm.P, &bad);
  if (bad) throw PreconditionError(*bad);
  detail::require_equations(eqs, data);
  auto alpha = detail::danielewski_map(norm.ring, norm.ring, norm.P, norm.P, inst.n, inst.m, data);
  auto inv = detail::danielewski_map(norm.ring, norm.ring, norm.P, norm.P, inst.n, inst.m,
                                     detail::inverse_data(data, inst.n));
  if (norm.change) {
    const auto& [tau, back] = *norm.change;
    alpha = compose(back, compose(alpha, tau));
    inv = compose(back, compose(inv, tau));
  }
  alpha.set_inverse(inv);
  if (!is_verified_automorphism(alpha)) throw Error("internal: constructed map failed the automorphism checks");
  return alpha;
}

// Q = Y^m only. alpha(x) = lambda x, alpha(s) = mu s + x^(n+e) a(x),
// alpha(y) = (mu^d / lambda^n) y + F(x, s) and alpha(z) from
// (lambda x)^e alpha(z) = alpha(y)^m - alpha(s).
inline RingMorphism build_auto_newfamily(const FamilyInstance& inst, const AutomorphismData& data) {
  if (inst.kind != FamilyKind::new_family) throw PreconditionError("expected a new-family instance");
  if (!(inst.Q == Polynomial::variable(inst.Q.context(), 1).pow(static_cast<unsigned long>(inst.m)))) {
    throw PreconditionError("automorphisms are only constructed for Q = Y^m");
  }
  if (data.lambda == 0 || data.mu == 0) throw PreconditionError("lambda and mu must be nonzero");
  auto eqs = detail::newfamily_equations(inst);
  detail::require_equations(eqs, data);

  auto build = [&](const AutomorphismData& d) {
    const long n = inst.n, e = inst.e, m = inst.m, dd = inst.d;
    const auto& pc = inst.P.context();
    auto X = Polynomial::variable(pc, 0), S = Polynomial::variable(pc, 1);
    Polynomial xne = X.pow(static_cast<unsigned long>(n + e));
    Polynomial num = inst.P.substitute({d.lambda * X, d.mu * S + xne * detail::a_in(d, pc, 0)}, pc) -
                     pow(d.mu, dd) * inst.P;
    auto F = exact_quotient(num, pow(d.lambda, n) * X.pow(static_cast<unsigned long>(n)));
    if (!F) throw Error("internal: F numerator is not divisible by lambda^n x^n (" + d.to_string() + ")");
    const auto& ring = inst.ring;
    const auto& ctx = ring.context();
    auto x = ring.var(0), y = ring.var(1), z = ring.var(2);
    Polynomial xe = x.pow(static_cast<unsigned long>(e));
    Polynomial s = y.pow(static_cast<unsigned long>(m)) - xe * z;
    Polynomial ay = pow(d.mu, dd) / pow(d.lambda, n) * y + F->substitute({x, s}, ctx);
    Polynomial as = d.mu * s + x.pow(static_cast<unsigned long>(n + e)) * detail::a_in(d, ctx, 0);
    auto az = exact_quotient(ay.pow(static_cast<unsigned long>(m)) - as, pow(d.lambda, e) * xe);
    if (!az) throw Error("internal: z-image numerator is not divisible by lambda^e x^e (" + d.to_string() + ")");
    return RingMorphism(ring, ring, {d.lambda * x, ay, *az});
  };
  auto alpha = build(data);
  alpha.set_inverse(build(detail::inverse_data(data, inst.n + inst.e)));
  if (!is_verified_automorphism(alpha)) throw Error("internal: constructed map failed the automorphism checks");
  return alpha;
}

inline RingMorphism build_automorphism(const FamilyInstance& inst, const AutomorphismData& data) {
  switch (inst.kind) {
    case FamilyKind::danielewski: return build_auto_danielewski(inst, data);
    case FamilyKind::new_family: return build_auto_newfamily(inst, data);
    default: throw PreconditionError("no automorphism formula for " + to_string(inst.kind) + " instances");
  }
}

// The (lambda, mu) conditions for the instance's automorphisms.
inline std::vector<MultEquation> automorphism_conditions(const FamilyInstance& inst) {
  if (inst.kind == FamilyKind::danielewski) {
    auto norm = detail::danielewski_normal(inst);
    return detail::danielewski_equations(inst, norm.P, nullptr);
  }
  if (inst.kind == FamilyKind::new_family) return detail::newfamily_equations(inst);
  throw PreconditionError("no automorphism formula for " + to_string(inst.kind) + " instances");
}

// Random data satisfying the conditions: free parameters and a(x) random,
// the sign of even roots random.
inline AutomorphismData random_automorphism_data(const FamilyInstance& inst, Rng& rng, int a_degree = 2) {
  auto sol = solve_multiplicative(automorphism_conditions(inst));
  if (sol.status != MultStatus::solvable) throw PreconditionError("no rational automorphism data: " + sol.reason);
  std::vector<Rational> free;
  for (std::size_t t = sol.rank; t < 2; ++t) free.push_back(random_rational(rng, 3, 2));
  std::bernoulli_distribution flip(0.5);
  auto [lam, mu] = sol.point(free);
  // An even root may be taken with either sign; try the flipped point too.
  auto eqs = automorphism_conditions(inst);
  for (std::size_t t = 0; t < sol.rank; ++t) {
    if (!flip(rng)) continue;
    auto fixed = sol.fixed;
    sol.fixed[t] = -sol.fixed[t];
    auto [l2, m2] = sol.point(free);
    if (satisfies(eqs, l2, m2)) {
      lam = l2;
      mu = m2;
    } else {
      sol.fixed = fixed;
    }
  }
  RandomShape shape{3, a_degree, 3, 1, {}};
  return {lam, mu, random_polynomial(a_context(), rng, shape)};
}

enum class IsoVerdict { isomorphic, not_isomorphic, not_over_rationals };

inline std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::not_isomorphic: return "not-isomorphic";
    case IsoVerdict::not_over_rationals: return "not-over-rationals";
  }
  return "?";
}

struct IsoDecision {
  IsoVerdict verdict = IsoVerdict::not_isomorphic;
  std::string reason;
  std::optional<RingMorphism> witness;  // B1 -> B2 with verified inverse
  std::optional<AutomorphismData> data;
};

inline IsoDecision iso_decide(const FamilyInstance& a, const FamilyInstance& b) {
  if (a.kind != FamilyKind::danielewski || b.kind != FamilyKind::danielewski) {
    throw PreconditionError("iso_decide compares Danielewski instances");
  }
  IsoDecision out;
  if (a.n != b.n) {
    out.reason = "n differs (" + std::to_string(a.n) + " vs " + std::to_string(b.n) + ")";
    return out;
  }
  if (a.m != b.m) {
    out.reason = "deg_Y P differs (" + std::to_string(a.m) + " vs " + std::to_string(b.m) + ")";
    return out;
  }
  auto na = detail::danielewski_normal(a), nb = detail::danielewski_normal(b);
  std::vector<MultEquation> eqs;
  if (auto bad = detail::congruence_equations(na.P, nb.P, a.m, a.n, "f", "g", eqs)) {
    out.reason = *bad;
    return out;
  }
  auto sol = solve_multiplicative(eqs);
  if (sol.status == MultStatus::infeasible) {
    out.reason = sol.reason;
    return out;
  }
  if (sol.status == MultStatus::needs_extension) {
    out.verdict = IsoVerdict::not_over_rationals;
    out.reason = "isomorphic only after adjoining a root: " + sol.reason;
    return out;
  }
  auto [lam, mu] = sol.point();
  AutomorphismData d{lam, mu, Polynomial(a_context())};
  auto psi = detail::danielewski_map(na.ring, nb.ring, na.P, nb.P, a.n, a.m, d);
  auto inv = detail::danielewski_map(nb.ring, na.ring, nb.P, na.P, a.n, a.m, detail::inverse_data(d, a.n));
  if (na.change) {
    psi = compose(psi, na.change->first);
    inv = compose(na.change->second, inv);
  }
  if (nb.change) {
    psi = compose(nb.change->second, psi);
    inv = compose(inv, nb.change->first);
  }
  if (!check_morphism(psi) || !check_morphism(inv) || !check_inverse(psi, inv)) {
    throw Error("internal: isomorphism witness failed verification");
  }
  psi.set_inverse(inv);
  out.verdict = IsoVerdict::isomorphic;
  out.reason = "lambda=" + to_string(lam) + ", mu=" + to_string(mu) + " satisfy every congruence";
  out.witness = psi;
  out.data = d;
  return out;
}

struct DegreePreservationReport {
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// deg(alpha(b)) = deg(b) on the generators and on random b.
inline DegreePreservationReport verify_degree_preservation(const RingMorphism& alpha, const LndDegree& deg,
                                                           std::size_t samples, std::uint64_t seed = 1,
                                                           int max_degree = 4) {
  DegreePreservationReport rep;
  const auto& ring = alpha.source();
  auto check = [&](const Polynomial& b) {
    ++rep.samples;
    Degree lhs = deg(alpha(b)), rhs = deg(b);
    if (lhs != rhs) {
      rep.failures.push_back("deg(alpha(" + b.to_string() + ")) = " + lhs.to_string() + " but deg = " +
                             rhs.to_string());
    }
  };
  for (std::size_t i = 0; i < ring.size(); ++i) check(ring.var(i));
  Rng rng(seed);
  RandomShape shape{3, max_degree, 4, 1, {}};
  for (std::size_t k = 0; k < samples; ++k) {
    Polynomial b = random_nonzero_polynomial(ring.context(), rng, shape);
    if (ring.is_zero(b)) continue;
    check(b);
  }
  return rep;
}

}  // namespace lndfilt
