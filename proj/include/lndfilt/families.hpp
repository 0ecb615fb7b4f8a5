#pragma once

// The three hypersurface families with their canonical derivations:
//   Danielewski     x^n z = P(x, y)
//   Koras-Russell   y (x^n + z^e)^l = Q(x, z, t)
//   new family      x^n y = P(x, s),  s = Q(x, y) - x^e z
// Parameters are polynomials in their own small contexts (see the
// *_params() functions). Constructors normalize so that the origin lies on
// the hypersurface and check every declared degree against the oracle.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lndfilt/filtration.hpp"

namespace lndfilt {

enum class FamilyKind { danielewski, koras_russell2, new_family };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::danielewski: return "danielewski";
    case FamilyKind::koras_russell2: return "kr2";
    case FamilyKind::new_family: return "new";
  }
  return "?";
}

inline const VariableContext& danielewski_params() {
  static const VariableContext ctx{"X", "Y"};
  return ctx;
}
inline const VariableContext& kr2_params() {
  static const VariableContext ctx{"X", "Z", "T"};
  return ctx;
}
inline const VariableContext& newfamily_p_params() {
  static const VariableContext ctx{"X", "S"};
  return ctx;
}
inline const VariableContext& newfamily_q_params() {
  static const VariableContext ctx{"X", "Y"};
  return ctx;
}

struct FamilyInstance {
  FamilyKind kind;
  long n = 0, e = 0, l = 0;
  long m = 0;  // main-variable degree: deg_Y P, deg_T Q, or deg_Y Q
  long d = 0;  // deg_S P (new family only)
  Polynomial P, Q;  // normalized parameters; Q unused for Danielewski, P for KR2
  RingPresentation ring;
  Derivation derivation;
  std::vector<Polynomial> kernel_generators;
  std::vector<Polynomial> slices;
  std::vector<std::string> slice_names;
  Polynomial plinth;
  std::vector<long> degrees;
  std::vector<std::string> notes;  // normalizations applied

  Polynomial relation() const { return ring.relations().generators().front(); }

  FiltrationSpec filtration_spec() const {
    return {derivation, kernel_generators, slices, degrees, {}, slice_names};
  }

  std::string label() const {
    switch (kind) {
      case FamilyKind::danielewski:
        return "danielewski(n=" + std::to_string(n) + ", P=" + P.to_string() + ")";
      case FamilyKind::koras_russell2:
        return "kr2(n=" + std::to_string(n) + ", e=" + std::to_string(e) + ", l=" + std::to_string(l) +
               ", Q=" + Q.to_string() + ")";
      case FamilyKind::new_family:
        return "new(n=" + std::to_string(n) + ", e=" + std::to_string(e) + ", P=" + P.to_string() +
               ", Q=" + Q.to_string() + ")";
    }
    return "?";
  }
};

namespace detail {

// p with variable v replaced by v + c.
inline Polynomial shift_variable(const Polynomial& p, std::size_t v, const Rational& c) {
  std::vector<Polynomial> ims;
  for (std::size_t i = 0; i < p.context().size(); ++i) ims.push_back(Polynomial::variable(p.context(), i));
  ims[v] = ims[v] + Polynomial::constant(p.context(), c);
  return p.substitute(ims, p.context());
}

// Coefficients (constant first) of p restricted to the axis of variable v.
inline std::vector<Rational> axis_coefficients(const Polynomial& p, std::size_t v) {
  std::vector<Rational> origin(p.context().size(), 0);
  std::vector<Rational> out;
  for (const auto& c : p.coefficients_in(v)) out.push_back(c.evaluate(origin));
  return out;
}

inline Rational at_origin(const Polynomial& p) { return p.evaluate(std::vector<Rational>(p.context().size(), 0)); }

inline void require_monic(const Polynomial& p, std::size_t v, const std::string& what) {
  auto cs = p.coefficients_in(v);
  if (cs.empty() || !(cs.back() == Polynomial::constant(p.context(), 1))) {
    throw PreconditionError(what + " must be monic in " + p.context().name(v));
  }
}

// Translates variable v by a rational root of the axis polynomial so that
// p vanishes at the origin. Returns the shift applied.
inline Rational normalize_origin(Polynomial& p, std::size_t v, const std::string& what) {
  if (at_origin(p) == 0) return 0;
  auto roots = rational_roots(axis_coefficients(p, v));
  if (roots.empty()) {
    throw PreconditionError(what + " has no rational root on the " + p.context().name(v) +
                            "-axis, so the origin cannot be moved onto the hypersurface");
  }
  p = shift_variable(p, v, roots.front());
  return roots.front();
}

// A parameter polynomial moved into the ring context through a variable map.
inline Polynomial into_ring(const Polynomial& p, const std::vector<Polynomial>& images, const VariableContext& ctx) {
  return p.substitute(images, ctx);
}

inline void verify_declarations(const FamilyInstance& inst, std::size_t nilp_bound) {
  auto deg = LndDegree::certify(inst.derivation, nilp_bound);
  const auto& ring = inst.ring;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Degree got = deg(ring.var(i));
    if (got != Degree(inst.degrees[i])) {
      throw Error("internal: declared deg(" + ring.context().name(i) + ") = " + std::to_string(inst.degrees[i]) +
                  " but the oracle gives " + got.to_string());
    }
  }
  for (const auto& z : inst.kernel_generators) {
    if (!kernel_member(inst.derivation, z)) throw Error("internal: kernel generator " + z.to_string() + " not in ker");
  }
  for (const auto& s : inst.slices) {
    if (!is_local_slice(inst.derivation, s)) throw Error("internal: " + s.to_string() + " is not a local slice");
    if (!ring.equal(inst.derivation.apply(s), inst.plinth)) {
      throw Error("internal: D(" + s.to_string() + ") differs from the declared plinth generator");
    }
  }
  if (!kernel_member(inst.derivation, inst.plinth)) throw Error("internal: plinth generator not in ker");
}

}  // namespace detail

inline constexpr std::size_t kFamilyNilpBound = 64;

// B = Q[x,y,z]/(x^n z - P(x,y)), D = x^n d/dy + P_y d/dz.
inline FamilyInstance make_danielewski(long n, Polynomial P, std::size_t nilp_bound = kFamilyNilpBound) {
  if (!(P.context() == danielewski_params())) P = P.embed(danielewski_params());
  if (n < 2) throw PreconditionError("danielewski: n >= 2 required");
  long m = P.degree_in(1);
  if (m < 2) throw PreconditionError("danielewski: P must have Y-degree >= 2");
  detail::require_monic(P, 1, "danielewski: P");
  std::vector<std::string> notes;
  Rational c = detail::normalize_origin(P, 1, "danielewski: P(0, Y)");
  if (c != 0) notes.push_back("translated Y -> Y + " + to_string(c) + " so that P(0,0) = 0");

  VariableContext ctx{"x", "y", "z"};
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  Polynomial Pxy = detail::into_ring(P, {x, y}, ctx);
  Polynomial xn = x.pow(static_cast<unsigned long>(n));
  RingPresentation ring(ctx, {xn * z - Pxy});
  Derivation d(ring, {ring.zero(), xn, Pxy.partial_derivative(1)});
  FamilyInstance inst{FamilyKind::danielewski, n, 0, 0, m, 0, P, Polynomial(danielewski_params()), ring, d,
                      {x}, {y}, {}, xn, {0, 1, m}, notes};
  detail::verify_declarations(inst, nilp_bound);
  return inst;
}

// B = Q[x,y,z,t]/(y (x^n + z^e)^l - Q(x,z,t)), D = Q_t d/dy + (x^n + z^e)^l d/dt.
inline FamilyInstance make_koras_russell2(long n, long e, long l, Polynomial Q,
                                          std::size_t nilp_bound = kFamilyNilpBound) {
  if (!(Q.context() == kr2_params())) Q = Q.embed(kr2_params());
  if (n < 2 || e < 2 || l < 2) throw PreconditionError("kr2: n, e, l > 1 required");
  long m = Q.degree_in(2);
  if (m < 2) throw PreconditionError("kr2: Q must have T-degree > 1");
  detail::require_monic(Q, 2, "kr2: Q");
  std::vector<std::string> notes;
  Rational c = detail::normalize_origin(Q, 2, "kr2: Q(0, 0, T)");
  if (c != 0) notes.push_back("translated T -> T + " + to_string(c) + " so that Q(0,0,0) = 0");

  VariableContext ctx{"x", "y", "z", "t"};
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2),
       t = Polynomial::variable(ctx, 3);
  Polynomial Qr = detail::into_ring(Q, {x, z, t}, ctx);
  Polynomial plinth = (x.pow(static_cast<unsigned long>(n)) + z.pow(static_cast<unsigned long>(e)))
                          .pow(static_cast<unsigned long>(l));
  RingPresentation ring(ctx, {y * plinth - Qr});
  Derivation d(ring, {ring.zero(), Qr.partial_derivative(3), ring.zero(), plinth});
  FamilyInstance inst{FamilyKind::koras_russell2, n, e, l, m, 0, Polynomial(newfamily_p_params()), Q, ring, d,
                      {x, z}, {t}, {}, plinth, {0, m, 0, 1}, notes};
  detail::verify_declarations(inst, nilp_bound);
  return inst;
}

// R = Q[x,y,z]/(x^n y - P(x, Q(x,y) - x^e z)), s = Q(x,y) - x^e z,
// D = x^e P_s d/dy + (Q_y P_s - x^n) d/dz, so D(s) = x^(n+e).
inline FamilyInstance make_new_family(long n, long e, Polynomial P, Polynomial Q,
                                      std::size_t nilp_bound = kFamilyNilpBound) {
  if (!(P.context() == newfamily_p_params())) P = P.embed(newfamily_p_params());
  if (!(Q.context() == newfamily_q_params())) Q = Q.embed(newfamily_q_params());
  if (n < 2 || e < 1) throw PreconditionError("new family: n >= 2 and e >= 1 required");
  long d = P.degree_in(1), m = Q.degree_in(1);
  if (d < 2) throw PreconditionError("new family: P must have S-degree >= 2");
  if (m < 1) throw PreconditionError("new family: Q must have Y-degree >= 1");
  detail::require_monic(P, 1, "new family: P");
  detail::require_monic(Q, 1, "new family: Q");

  // The origin lies on R iff P(0, Q(0,0)) = 0. Moving y by b keeps the
  // shape (P picks up -b X^n), and constants of Q are absorbed into P.
  std::vector<std::string> notes;
  auto absorb_q0 = [&] {
    Rational q0 = detail::at_origin(Q);
    if (q0 == 0) return;
    Q = Q - Polynomial::constant(Q.context(), q0);
    P = detail::shift_variable(P, 1, q0);
    notes.push_back("absorbed the constant " + to_string(q0) + " of Q into P");
  };
  absorb_q0();
  if (detail::at_origin(P) != 0) {
    std::optional<Rational> shift;
    for (const auto& c : rational_roots(detail::axis_coefficients(P, 1))) {
      auto qc = detail::axis_coefficients(Q, 1);
      qc[0] -= c;
      auto bs = rational_roots(qc);
      if (!bs.empty()) {
        shift = bs.front();
        break;
      }
    }
    if (!shift) throw PreconditionError("new family: no rational translation puts the origin on the surface");
    Rational b = *shift;
    Q = detail::shift_variable(Q, 1, b);
    P = P - b * Polynomial::variable(P.context(), 0).pow(static_cast<unsigned long>(n));
    notes.push_back("translated Y -> Y + " + to_string(b));
    absorb_q0();
  }

  VariableContext ctx{"x", "y", "z"};
  auto x = Polynomial::variable(ctx, 0), y = Polynomial::variable(ctx, 1), z = Polynomial::variable(ctx, 2);
  Polynomial xe = x.pow(static_cast<unsigned long>(e)), xn = x.pow(static_cast<unsigned long>(n));
  Polynomial Qxy = detail::into_ring(Q, {x, y}, ctx);
  Polynomial s = Qxy - xe * z;
  Polynomial Ps = detail::into_ring(P.partial_derivative(1), {x, s}, ctx);
  RingPresentation ring(ctx, {xn * y - detail::into_ring(P, {x, s}, ctx)});
  Derivation der(ring, {ring.zero(), xe * Ps, Qxy.partial_derivative(1) * Ps - xn});
  FamilyInstance inst{FamilyKind::new_family, n, e, 0, m, d, P, Q, ring, der,
                      {x}, {ring.normal_form(s)}, {"S"}, xn * xe, {0, d, m * d}, notes};
  detail::verify_declarations(inst, nilp_bound);
  return inst;
}

// Jacobian test at the origin.
inline bool singular_at_origin(const Polynomial& relation) {
  std::vector<Rational> origin(relation.context().size(), 0);
  if (relation.evaluate(origin) != 0) throw PreconditionError("the origin is not on the hypersurface");
  for (std::size_t i = 0; i < relation.context().size(); ++i) {
    if (relation.partial_derivative(i).evaluate(origin) != 0) return false;
  }
  return true;
}

// Layer formulas for each family, as the basis monomial of layer r in the
// filtration coordinates of f:
//   Danielewski  F_{mi+j}       = k[x] y^j z^i
//   KR2          F_{mi+j}       = k[x,z] t^j y^i
//   new family   F_{mdi+dj+l}   = k[x] s^l y^j z^i
inline std::function<std::optional<Polynomial>(long)> stated_layer_basis(const FamilyInstance& inst,
                                                                         const Filtration& f) {
  const VariableContext ext = f.ext_context();
  auto mono = [ext](std::vector<std::pair<const char*, long>> powers) {
    Monomial mm(ext.size());
    for (auto [name, k] : powers) mm[ext.index(name)] = static_cast<Exponent>(k);
    return Polynomial::monomial(ext, mm);
  };
  long m = inst.m, d = inst.d;
  switch (inst.kind) {
    case FamilyKind::danielewski:
      return [=](long r) -> std::optional<Polynomial> { return mono({{"Y", r % m}, {"Z", r / m}}); };
    case FamilyKind::koras_russell2:
      return [=](long r) -> std::optional<Polynomial> { return mono({{"T", r % m}, {"Y", r / m}}); };
    case FamilyKind::new_family:
      return [=](long r) -> std::optional<Polynomial> {
        return mono({{"S", r % d}, {"Y", (r % (m * d)) / d}, {"Z", r / (m * d)}});
      };
  }
  return {};
}

// Graded relations in the filtration coordinates (the oracle-consistent
// versions; see the README for the new-family relation).
inline std::vector<Polynomial> stated_graded_relations(const FamilyInstance& inst, const VariableContext& ext) {
  auto v = [&](const char* name) { return Polynomial::variable(ext, name); };
  auto pw = [](const Polynomial& p, long k) { return p.pow(static_cast<unsigned long>(k)); };
  switch (inst.kind) {
    case FamilyKind::danielewski:
      return {pw(v("X"), inst.n) * v("Z") - pw(v("Y"), inst.m)};
    case FamilyKind::koras_russell2:
      return {v("Y") * pw(pw(v("X"), inst.n) + pw(v("Z"), inst.e), inst.l) - pw(v("T"), inst.m)};
    case FamilyKind::new_family:
      return {pw(v("X"), inst.n) * v("Y") - pw(v("S"), inst.d), pw(v("Y"), inst.m) - pw(v("X"), inst.e) * v("Z")};
  }
  return {};
}

}  // namespace lndfilt
