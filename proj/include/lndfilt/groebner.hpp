#pragma once

// Ideals in Q[x1..xn]: Buchberger's algorithm (normal selection strategy,
// product and chain criteria, full autoreduction), normal forms,
// elimination, saturation and initial ideals for a weight vector.

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lndfilt/monomial_order.hpp"
#include "lndfilt/polynomial.hpp"

namespace lndfilt {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

// Counts reduction steps; throws BudgetExhausted past the limit.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit = kDefaultStepBudget) : limit_(limit) {}
  void tick(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExhausted("budget exhausted after " + std::to_string(limit_) + " reduction steps");
    }
  }
  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

namespace detail {

// Terms sorted descending under some monomial order.
using SortedTerms = std::vector<Term>;

inline SortedTerms sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
  SortedTerms t = p.terms();
  if (!ord.is_canonical()) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  }
  return t;
}

// out = a[a_from..] - c * m * b[b_from..]
inline SortedTerms sub_scaled(const SortedTerms& a, std::size_t a_from, const Rational& c, const Monomial& m,
                              const SortedTerms& b, std::size_t b_from, const MonomialOrder& ord) {
  SortedTerms out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from, j = b_from;
  Monomial shifted;
  bool have_shifted = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_shifted) {
      shifted = b[j].monomial * m;
      have_shifted = true;
    }
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = ord.compare(a[i].monomial, shifted);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(shifted), -(c * b[j].coeff)});
      ++j;
      have_shifted = false;
    } else {
      Rational s = a[i].coeff - c * b[j].coeff;
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

inline SortedTerms shifted(const SortedTerms& a, const Monomial& m) {
  SortedTerms out = a;
  for (auto& t : out) t.monomial = t.monomial * m;
  return out;
}

inline void make_monic(SortedTerms& t) {
  if (t.empty()) return;
  Rational inv = 1 / t.front().coeff;
  if (inv == 1) return;
  for (auto& term : t) term.coeff *= inv;
}

// Full reduction of p by the list of (sorted, monic) basis elements.
inline SortedTerms reduce(SortedTerms work, const std::vector<SortedTerms>& basis, const MonomialOrder& ord,
                          StepBudget& budget, std::size_t skip = static_cast<std::size_t>(-1)) {
  SortedTerms rem;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    const SortedTerms* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().monomial.divides(lt.monomial)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    budget.tick();
    Rational c = lt.coeff / divisor->front().coeff;
    Monomial m = lt.monomial / divisor->front().monomial;
    work = sub_scaled(work, head + 1, c, m, *divisor, 1, ord);
    head = 0;
  }
  return rem;
}

}  // namespace detail

// A reduced Groebner basis together with the order it is reduced for.
class GroebnerBasis {
 public:
  GroebnerBasis(VariableContext ctx, MonomialOrder order, std::vector<detail::SortedTerms> elements)
      : ctx_(std::move(ctx)), order_(std::move(order)), elements_(std::move(elements)) {}

  const VariableContext& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return elements_.size() == 1 && elements_[0].front().monomial.is_one(); }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& e : elements_) out.push_back(Polynomial::from_terms(ctx_, e));
    return out;
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& e : elements_) out.push_back(e.front().monomial);
    return out;
  }
  const std::vector<detail::SortedTerms>& elements() const { return elements_; }

  Polynomial reduce(const Polynomial& p, StepBudget& budget) const {
    if (!(p.context() == ctx_)) throw ContextMismatch("normal form: polynomial and ideal contexts differ");
    auto rem = detail::reduce(detail::sorted_terms(p, order_), elements_, order_, budget);
    return Polynomial::from_terms(ctx_, std::move(rem));
  }
  Polynomial reduce(const Polynomial& p, std::size_t step_budget = kDefaultStepBudget) const {
    StepBudget budget(step_budget);
    return reduce(p, budget);
  }
  bool is_standard(const Monomial& m) const {
    return std::none_of(elements_.begin(), elements_.end(),
                        [&](const detail::SortedTerms& e) { return e.front().monomial.divides(m); });
  }

 private:
  VariableContext ctx_;
  MonomialOrder order_;
  std::vector<detail::SortedTerms> elements_;
};

class Ideal {
 public:
  explicit Ideal(VariableContext ctx, std::vector<Polynomial> generators = {}) : ctx_(std::move(ctx)) {
    for (auto& g : generators) {
      if (!(g.context() == ctx_)) throw ContextMismatch("ideal generator lives in a different context");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const VariableContext& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Cached basis, or nullptr.
  const GroebnerBasis* basis() const { return gb_.get(); }
  const GroebnerBasis* basis_for(const MonomialOrder& ord) const {
    return gb_ && gb_->order() == ord ? gb_.get() : nullptr;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ">";
  }

 private:
  friend Ideal groebner(const Ideal&, const MonomialOrder&, StepBudget&);

  VariableContext ctx_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<const GroebnerBasis> gb_;
};

namespace detail {

inline std::vector<SortedTerms> buchberger(const Ideal& ideal, const MonomialOrder& ord, StepBudget& budget) {
  std::vector<SortedTerms> basis;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](SortedTerms h) {
    make_monic(h);
    std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      if (!basis[i].empty()) pending.insert({i, k});
    }
  };

  for (const auto& g : ideal.generators()) {
    auto r = reduce(sorted_terms(g, ord), basis, ord, budget);
    if (!r.empty()) add(std::move(r));
  }

  while (!pending.empty()) {
    // Normal strategy: smallest lcm of leading monomials first.
    auto best = pending.begin();
    Monomial best_lcm = Monomial::lcm(basis[best->first].front().monomial, basis[best->second].front().monomial);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = Monomial::lcm(basis[it->first].front().monomial, basis[it->second].front().monomial);
      if (ord.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Monomial& li = basis[i].front().monomial;
    const Monomial& lj = basis[j].front().monomial;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].empty()) continue;
      if (!basis[k].front().monomial.divides(best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(i, k)) && !pending.count(key(j, k));
    }
    if (chain) continue;
    budget.tick();
    SortedTerms s = shifted(basis[i], best_lcm / li);
    s = sub_scaled(s, 1, Rational(1), best_lcm / lj, basis[j], 1, ord);
    auto r = reduce(std::move(s), basis, ord, budget);
    if (!r.empty()) add(std::move(r));
  }

  // Minimize: drop elements whose leading monomial another element divides.
  std::vector<SortedTerms> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].front().monomial;
      const auto& mj = basis[j].front().monomial;
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Autoreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SortedTerms tail(minimal[i].begin() + 1, minimal[i].end());
    auto r = reduce(std::move(tail), minimal, ord, budget, i);
    r.insert(r.begin(), minimal[i].front());
    minimal[i] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const SortedTerms& a, const SortedTerms& b) { return ord.greater(a.front().monomial, b.front().monomial); });
  return minimal;
}

}  // namespace detail

// Returns a copy of the ideal carrying its reduced Groebner basis for ord.
inline Ideal groebner(const Ideal& ideal, const MonomialOrder& ord, StepBudget& budget) {
  if (ideal.basis_for(ord)) return ideal;
  Ideal out = ideal;
  out.gb_ = std::make_shared<const GroebnerBasis>(ideal.context(), ord, detail::buchberger(ideal, ord, budget));
  return out;
}
inline Ideal groebner(const Ideal& ideal, const MonomialOrder& ord, std::size_t step_budget = kDefaultStepBudget) {
  StepBudget budget(step_budget);
  return groebner(ideal, ord, budget);
}

inline std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& ord,
                                              std::size_t step_budget = kDefaultStepBudget) {
  return groebner(ideal, ord, step_budget).basis()->polynomials();
}

inline Polynomial normal_form(const Polynomial& p, const Ideal& ideal, const MonomialOrder& ord,
                              std::size_t step_budget = kDefaultStepBudget) {
  StepBudget budget(step_budget);
  if (const auto* gb = ideal.basis_for(ord)) return gb->reduce(p, budget);
  Ideal with_basis = groebner(ideal, ord, budget);
  return with_basis.basis()->reduce(p, budget);
}

inline bool contains(const Ideal& ideal, const Polynomial& p, std::size_t step_budget = kDefaultStepBudget) {
  const MonomialOrder ord = ideal.basis() ? ideal.basis()->order() : MonomialOrder::grlex();
  return normal_form(p, ideal, ord, step_budget).is_zero();
}

// Ideal equality via reduced Groebner bases under grlex.
inline bool same_ideal(const Ideal& a, const Ideal& b, std::size_t step_budget = kDefaultStepBudget) {
  if (!(a.context() == b.context())) throw ContextMismatch("comparing ideals of different contexts");
  auto ord = MonomialOrder::grlex();
  return groebner_basis(a, ord, step_budget) == groebner_basis(b, ord, step_budget);
}

// Generators of I intersected with the subring free of the dropped
// variables (same context; the returned generators avoid them).
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop,
                       std::size_t step_budget = kDefaultStepBudget) {
  if (drop.empty()) return ideal;
  auto ord = MonomialOrder::elimination(ideal.context().size(), drop);
  std::vector<Polynomial> kept;
  for (auto& g : groebner_basis(ideal, ord, step_budget)) {
    bool free = std::none_of(drop.begin(), drop.end(), [&](std::size_t v) { return g.involves(v); });
    if (free) kept.push_back(std::move(g));
  }
  return Ideal(ideal.context(), std::move(kept));
}

// I : f^infinity, by adjoining t, adding 1 - t*f and eliminating t.
inline Ideal saturate(const Ideal& ideal, const Polynomial& f, std::size_t step_budget = kDefaultStepBudget) {
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  const auto& ctx = ideal.context();
  if (!(f.context() == ctx)) throw ContextMismatch("saturation: f lives in a different context");
  std::vector<std::string> names = ctx.names();
  std::string fresh = "_t";
  while (ctx.find(fresh) && ctx.name(*ctx.find(fresh)) == fresh) fresh += "_";
  names.push_back(fresh);
  VariableContext ext(names);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  Polynomial t = Polynomial::variable(ext, names.size() - 1);
  gens.push_back(Polynomial::constant(ext, 1) - t * f.embed(ext));
  Ideal elim = eliminate(Ideal(ext, std::move(gens)), {names.size() - 1}, step_budget);
  std::vector<std::size_t> back(names.size() - 1);
  std::iota(back.begin(), back.end(), std::size_t{0});
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) {
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial m(ctx.size());
      for (std::size_t i = 0; i < ctx.size(); ++i) m[i] = term.monomial[i];
      terms.push_back({std::move(m), term.coeff});
    }
    out.push_back(Polynomial::from_terms(ctx, std::move(terms)));
  }
  return Ideal(ctx, std::move(out));
}

// The ideal generated by the w-top forms of all elements of I, computed
// from a Groebner basis under the w-refined order with a lex tiebreak on
// the given permutation. Every returned generator is w-homogeneous.
inline Ideal initial_ideal(const Ideal& ideal, const WeightVector& w, std::vector<std::size_t> permutation = {},
                           std::size_t step_budget = kDefaultStepBudget) {
  if (w.size() != ideal.context().size()) throw ContextMismatch("weight vector length does not match the context");
  auto ord = MonomialOrder::weight_refined(w, std::move(permutation));
  std::vector<Polynomial> tops;
  for (const auto& g : groebner_basis(ideal, ord, step_budget)) tops.push_back(top_form(g, w));
  return Ideal(ideal.context(), std::move(tops));
}

}  // namespace lndfilt
