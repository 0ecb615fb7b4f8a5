#pragma once

// Bounded search for derivations of a hypersurface family instance, and
// the kernel-intersection evidence for the Makar-Limanov invariant.
//
// A derivation D with images of total degree <= N is well defined iff
// grad(f) . D = c f for a cofactor c of degree <= N - 1, which is linear in
// the image and cofactor coefficients. The system is block diagonal for the
// Z^k grading under which f is homogeneous, so it is solved block by block
// and every basis derivation returned is homogeneous.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lndfilt/families.hpp"
#include "lndfilt/linear_algebra.hpp"

namespace lndfilt {

struct SearchOptions {
  long image_degree_bound = 4;
  std::size_t nilp_bound = 20;
  std::size_t samples = 8;       // random combinations of basis derivations
  std::uint64_t seed = 1;
  std::size_t max_unknowns = 5000;
};

struct SearchCandidate {
  Derivation derivation;
  std::string origin;            // "basis k" or "sample k"
  bool nilpotent = false;
  std::string nilpotency_detail;
  bool multiple_of_canonical = false;
  std::optional<Polynomial> factor;  // f with D = f * canonical
};

struct LndSearchResult {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t grading_rank = 0;
  std::size_t blocks = 0;
  std::size_t solution_dimension = 0;
  bool canonical_in_space = false;
  std::vector<SearchCandidate> candidates;

  std::vector<const SearchCandidate*> survivors() const {
    std::vector<const SearchCandidate*> out;
    for (const auto& c : candidates) {
      if (c.nilpotent) out.push_back(&c);
    }
    return out;
  }
};

namespace detail {

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, long max_degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, long)> rec = [&](std::size_t v, long left) {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (long e = 0; e <= left; ++e) {
      m[v] = static_cast<Exponent>(e);
      rec(v + 1, left - e);
    }
    m[v] = 0;
  };
  if (max_degree >= 0) rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; });
  return out;
}

// Integer weight vectors (rows) spanning the gradings that make f
// homogeneous.
inline std::vector<std::vector<long>> homogeneity_gradings(const Polynomial& f) {
  std::size_t n = f.context().size();
  RatMatrix diffs;
  const Monomial& first = f.terms().front().monomial;
  for (const auto& t : f.terms()) {
    RatVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = t.monomial[i] - first[i];
    diffs.push_back(std::move(row));
  }
  std::vector<std::vector<long>> out;
  for (auto& v : nullspace(diffs, n)) {
    Integer den = 1;
    for (const auto& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<long> w;
    for (const auto& c : v) w.push_back(Integer(c * den).get_si());
    out.push_back(std::move(w));
  }
  return out;
}

inline std::vector<long> grade(const std::vector<std::vector<long>>& g, const Monomial& m) {
  std::vector<long> out;
  for (const auto& w : g) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m[i];
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

// D = f * canonical with f in the kernel-generator variables, or other.
inline std::pair<bool, std::optional<Polynomial>> classify_derivation(const FamilyInstance& inst, const Derivation& d) {
  const auto& ring = inst.ring;
  if (d.is_zero()) return {true, ring.zero()};
  for (const auto& z : inst.kernel_generators) {
    if (!d.apply(z).is_zero()) return {false, std::nullopt};
  }
  auto f = exact_quotient(d.apply(inst.slices.front()), ring.normal_form(inst.plinth));
  if (!f) return {false, std::nullopt};
  std::vector<std::size_t> kernel_vars;
  for (const auto& z : inst.kernel_generators) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (z == ring.var(i)) kernel_vars.push_back(i);
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (f->involves(i) && std::find(kernel_vars.begin(), kernel_vars.end(), i) == kernel_vars.end()) {
      return {false, std::nullopt};
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!ring.equal(d.image(i), *f * inst.derivation.image(i))) return {false, std::nullopt};
  }
  return {true, f};
}

inline LndSearchResult bounded_lnd_search(const FamilyInstance& inst, const SearchOptions& opts = {}) {
  if (opts.image_degree_bound < 1 || opts.nilp_bound < 1) throw PreconditionError("search bounds must be >= 1");
  const auto& ring = inst.ring;
  const auto& ctx = ring.context();
  const std::size_t n = ctx.size();
  if (ring.relations().generators().size() != 1) throw PreconditionError("search expects a hypersurface");
  const Polynomial f = ring.relations().generators().front();
  const long N = opts.image_degree_bound;

  std::vector<Monomial> image_monos;
  for (const auto& m : detail::monomials_up_to(n, N)) {
    if (ring.basis().is_standard(m)) image_monos.push_back(m);
  }
  std::vector<Monomial> cofactor_monos = detail::monomials_up_to(n, N - 1);

  // Unknown k: (variable i, monomial) for k < n * |image_monos|, then the
  // cofactor monomials.
  struct Unknown {
    std::optional<std::size_t> var;
    Monomial mono;
    std::vector<long> grade;
  };
  auto g = detail::homogeneity_gradings(f);
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xi(n);
    xi[i] = 1;
    auto gi = detail::grade(g, xi);
    for (const auto& m : image_monos) {
      auto gm = detail::grade(g, m);
      for (std::size_t k = 0; k < gm.size(); ++k) gm[k] -= gi[k];
      unknowns.push_back({i, m, gm});
    }
  }
  for (const auto& m : cofactor_monos) unknowns.push_back({std::nullopt, m, detail::grade(g, m)});
  if (unknowns.size() > opts.max_unknowns) {
    throw BudgetExhausted("search: " + std::to_string(unknowns.size()) + " unknowns exceed the budget of " +
                          std::to_string(opts.max_unknowns));
  }

  // Contribution of each unknown to the coefficient of each output monomial.
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(f.partial_derivative(i));
  std::map<std::vector<long>, std::vector<std::size_t>> blocks;
  for (std::size_t k = 0; k < unknowns.size(); ++k) blocks[unknowns[k].grade].push_back(k);

  LndSearchResult res;
  res.unknowns = unknowns.size();
  res.grading_rank = g.size();
  res.blocks = blocks.size();
  std::vector<std::vector<Polynomial>> basis_images;
  for (const auto& [grade, ks] : blocks) {
    std::map<Monomial, std::size_t> row_of;
    RatMatrix a;
    for (std::size_t c = 0; c < ks.size(); ++c) {
      const Unknown& u = unknowns[ks[c]];
      Polynomial contrib = u.var ? grad[*u.var].multiply_monomial(u.mono) : f.multiply_monomial(u.mono, -1);
      for (const auto& t : contrib.terms()) {
        auto [it, fresh] = row_of.emplace(t.monomial, a.size());
        if (fresh) a.emplace_back(ks.size(), Rational(0));
        a[it->second][c] += t.coeff;
      }
    }
    res.equations += a.size();
    for (const auto& v : nullspace(a, ks.size())) {
      std::vector<std::vector<Term>> terms(n);
      for (std::size_t c = 0; c < ks.size(); ++c) {
        const Unknown& u = unknowns[ks[c]];
        if (u.var && v[c] != 0) terms[*u.var].push_back({u.mono, v[c]});
      }
      std::vector<Polynomial> ims;
      for (auto& t : terms) ims.push_back(Polynomial::from_terms(ctx, std::move(t)));
      bool zero = std::all_of(ims.begin(), ims.end(), [](const Polynomial& p) { return p.is_zero(); });
      if (!zero) basis_images.push_back(std::move(ims));
    }
  }
  res.solution_dimension = basis_images.size();

  long canonical_degree = 0;
  for (const auto& im : inst.derivation.images()) {
    if (!im.is_zero()) canonical_degree = std::max(canonical_degree, im.total_degree().value());
  }
  res.canonical_in_space = canonical_degree <= N;

  auto examine = [&](std::vector<Polynomial> ims, std::string origin) {
    Derivation d(ring, std::move(ims));
    auto v = is_locally_nilpotent(d, opts.nilp_bound);
    auto [mult, factor] = classify_derivation(inst, d);
    res.candidates.push_back({d, std::move(origin), v.nilpotent(), v.detail, mult, factor});
  };
  std::vector<std::size_t> all_basis, nilpotent_basis;
  for (std::size_t b = 0; b < basis_images.size(); ++b) {
    examine(basis_images[b], "basis " + std::to_string(b + 1));
    all_basis.push_back(b);
    if (res.candidates.back().nilpotent) nilpotent_basis.push_back(b);
  }
  Rng rng(opts.seed);
  for (std::size_t s = 0; s < opts.samples && !basis_images.empty(); ++s) {
    // Sparse combinations of two or three basis derivations; every other
    // sample draws only from the nilpotent basis elements.
    const auto& pool = (s % 2 == 1 && !nilpotent_basis.empty()) ? nilpotent_basis : all_basis;
    std::vector<Polynomial> ims(n, ring.zero());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::size_t parts = 2 + s % 2;
    for (std::size_t p = 0; p < parts; ++p) {
      const auto& bi = basis_images[pool[pick(rng)]];
      Rational c = random_rational(rng, 3, 1);
      for (std::size_t i = 0; i < n; ++i) ims[i] += c * bi[i];
    }
    if (std::all_of(ims.begin(), ims.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    examine(std::move(ims), "sample " + std::to_string(s + 1));
  }
  return res;
}

struct MlEvidence {
  long max_degree = 0;
  std::size_t derivations_used = 0;
  std::size_t dimension = 0;            // of the kernel intersection in degree <= max_degree
  std::size_t predicted_dimension = 0;  // of the kernel-generator subalgebra there
  bool matches = false;
  std::vector<Polynomial> basis;
  std::string predicted;
};

// Intersection of the kernels of the canonical derivation and every
// nilpotent survivor, over polynomials of degree <= max_degree.
inline MlEvidence ml_evidence(const FamilyInstance& inst, const LndSearchResult& result, long max_degree = 6) {
  const auto& ring = inst.ring;
  std::vector<const Derivation*> ds{&inst.derivation};
  for (const auto* c : result.survivors()) ds.push_back(&c->derivation);
  std::vector<Monomial> monos;
  for (const auto& m : detail::monomials_up_to(ring.size(), max_degree)) {
    if (ring.basis().is_standard(m)) monos.push_back(m);
  }
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  RatMatrix a;
  for (std::size_t c = 0; c < monos.size(); ++c) {
    Polynomial mono = Polynomial::monomial(ring.context(), monos[c]);
    for (std::size_t k = 0; k < ds.size(); ++k) {
      Polynomial image = ds[k]->apply(mono);
      for (const auto& t : image.terms()) {
        auto [it, fresh] = row_of.emplace(std::make_pair(k, t.monomial), a.size());
        if (fresh) a.emplace_back(monos.size(), Rational(0));
        a[it->second][c] += t.coeff;
      }
    }
  }
  MlEvidence ev;
  ev.max_degree = max_degree;
  ev.derivations_used = ds.size();
  for (const auto& v : nullspace(a, monos.size())) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (v[c] != 0) terms.push_back({monos[c], v[c]});
    }
    ev.basis.push_back(Polynomial::from_terms(ring.context(), std::move(terms)));
  }
  ev.dimension = ev.basis.size();

  // Predicted: monomials in the kernel generators (ring variables here).
  std::vector<std::size_t> kv;
  for (const auto& z : inst.kernel_generators) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (z == ring.var(i)) kv.push_back(i);
    }
  }
  ev.predicted = "k[";
  for (std::size_t j = 0; j < kv.size(); ++j) ev.predicted += (j ? "," : "") + ring.context().name(kv[j]);
  ev.predicted += "]";
  bool inside = true;
  for (const auto& m : monos) {
    bool only_kernel = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (m[i] > 0 && std::find(kv.begin(), kv.end(), i) == kv.end()) only_kernel = false;
    }
    if (!only_kernel) continue;
    ++ev.predicted_dimension;
    Polynomial p = Polynomial::monomial(ring.context(), m);
    for (const auto* d : ds) inside = inside && d->apply(p).is_zero();
  }
  ev.matches = inside && ev.dimension == ev.predicted_dimension;
  return ev;
}

}  // namespace lndfilt
