#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// A Polynomial is a value: its variable context plus a list of terms kept
// sorted in the canonical order (graded lexicographic, first declared
// variable largest, largest term first). No stored coefficient is zero.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "lndfilt/errors.hpp"
#include "lndfilt/rational.hpp"

namespace lndfilt {

// An element of N u {-infinity}. Degrees of nonzero elements may also be
// negative when they describe the shift of a homogeneous derivation.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(long value) : value_(value), finite_(true) {}

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_minus_infinity() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  long value() const {
    if (!finite_) throw PreconditionError("degree is -infinity");
    return value_;
  }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Degree& a, const Degree& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend constexpr bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend constexpr bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }
  friend std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

 private:
  long value_ = 0;
  bool finite_ = false;
};

inline Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }

// Ordered list of distinct variable names. Shared by every polynomial
// built over it; two contexts are compatible when their names agree.
class VariableContext {
 public:
  VariableContext() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VariableContext(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    const auto& n = *names_;
    if (n.empty()) throw PreconditionError("a variable context needs at least one variable");
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i].empty()) throw PreconditionError("empty variable name");
      for (std::size_t j = 0; j < i; ++j) {
        if (n[i] == n[j]) throw PreconditionError("duplicate variable name '" + n[i] + "'");
      }
    }
  }
  VariableContext(std::initializer_list<std::string> names)
      : VariableContext(std::vector<std::string>(names)) {}

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const { return *names_; }

  // Index of a variable by exact name, or by a unique case-insensitive match.
  std::optional<std::size_t> find(std::string_view name) const {
    const auto& n = *names_;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == name) return i;
    }
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i].size() != name.size()) continue;
      bool same = std::equal(n[i].begin(), n[i].end(), name.begin(), [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
      });
      if (same) {
        if (hit) return std::nullopt;
        hit = i;
      }
    }
    return hit;
  }
  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw PreconditionError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponent = std::int32_t;

class Monomial {
 public:
  using Storage = boost::container::small_vector<Exponent, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e.begin(), e.end()) {}
  explicit Monomial(std::span<const Exponent> e) : exps_(e.begin(), e.end()) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const Storage& exponents() const { return exps_; }

  long total_degree() const {
    long d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    }
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    return r;
  }
  // a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  // Plain lexicographic comparison of exponent vectors; used for map keys.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  Storage exps_;
};

// Graded lexicographic comparison: -1, 0, +1.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

// Non-negative integer weight per variable.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<long> w) : weights_(std::move(w)) {
    for (auto v : weights_) {
      if (v < 0) throw PreconditionError("weights must be non-negative");
    }
  }
  WeightVector(std::initializer_list<long> w) : WeightVector(std::vector<long>(w)) {}

  std::size_t size() const { return weights_.size(); }
  long operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<long>& values() const { return weights_; }

  long degree(const Monomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
    return d;
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<long> weights_;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VariableContext ctx) : ctx_(std::move(ctx)) {}

  // Builds a polynomial from arbitrary terms: combines duplicates, drops
  // zeros and sorts canonically.
  static Polynomial from_terms(VariableContext ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    for (const auto& t : terms) {
      if (t.monomial.size() != p.ctx_.size()) {
        throw ContextMismatch("monomial length does not match the variable context");
      }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grlex_compare(a.monomial, b.monomial) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial constant(VariableContext ctx, const Rational& c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.push_back({Monomial(p.ctx_.size()), c});
    return p;
  }
  static Polynomial variable(VariableContext ctx, std::size_t index) {
    Polynomial p(std::move(ctx));
    Monomial m(p.ctx_.size());
    m[index] = 1;
    p.terms_.push_back({m, Rational(1)});
    return p;
  }
  static Polynomial variable(const VariableContext& ctx, std::string_view name) {
    return variable(ctx, ctx.index(name));
  }
  static Polynomial monomial(VariableContext ctx, Monomial m, Rational c = 1) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const VariableContext& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return 0;
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.front();
  }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree(terms_.front().monomial.total_degree());
  }
  // Highest exponent of a variable, or -1 for the zero polynomial.
  long degree_in(std::size_t var) const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.monomial[var]);
    return d;
  }
  bool involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[var] > 0; });
  }
  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coeff;
    }
    return 0;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, -1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ctx_);
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) prods.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
    }
    return from_terms(a.ctx_, std::move(prods));
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ctx_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned long k) const {
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1UL) result = result * base;
      k >>= 1UL;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Polynomial multiply_monomial(const Monomial& m, const Rational& c = 1) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
    return r;  // monomial orders are multiplicative, so the order is kept
  }

  Polynomial partial_derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.monomial[var] == 0) continue;
      Term d = t;
      d.coeff *= t.monomial[var];
      d.monomial[var] -= 1;
      out.push_back(std::move(d));
    }
    return from_terms(ctx_, std::move(out));
  }

  // Replaces variable i by images[i]; all images share the target context.
  Polynomial substitute(const std::vector<Polynomial>& images, const VariableContext& target) const {
    if (images.size() != ctx_.size()) throw ContextMismatch("substitution needs one image per variable");
    for (const auto& im : images) {
      if (!(im.context() == target)) throw ContextMismatch("substitution images live in different contexts");
    }
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<Exponent>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
      return cache[static_cast<std::size_t>(e)];
    };
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t v = 0; v < t.monomial.size(); ++v) {
        if (t.monomial[v] > 0) prod = prod * power(v, t.monomial[v]);
      }
      for (auto& pt : prod.terms_) acc.push_back(std::move(pt));
    }
    return from_terms(target, std::move(acc));
  }

  // Re-expresses the polynomial in another context. index_map[i] is the
  // target index of source variable i.
  Polynomial rename(const VariableContext& target, const std::vector<std::size_t>& index_map) const {
    if (index_map.size() != ctx_.size()) throw ContextMismatch("rename map has the wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target.size());
      for (std::size_t i = 0; i < index_map.size(); ++i) m[index_map[i]] += t.monomial[i];
      out.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(out));
  }

  // Moves the polynomial into a context whose names include all names of
  // this context (matched by name).
  Polynomial embed(const VariableContext& target) const {
    std::vector<std::size_t> map;
    for (const auto& n : ctx_.names()) {
      auto it = std::find(target.names().begin(), target.names().end(), n);
      if (it == target.names().end()) throw ContextMismatch("variable '" + n + "' missing from target context");
      map.push_back(static_cast<std::size_t>(it - target.names().begin()));
    }
    return rename(target, map);
  }

  // Coefficients as a polynomial in one variable: result[k] is the
  // coefficient of var^k (itself free of var).
  std::vector<Polynomial> coefficients_in(std::size_t var) const {
    long deg = degree_in(var);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max<long>(deg + 1, 0)));
    for (const auto& t : terms_) {
      Term c = t;
      c.monomial[var] = 0;
      buckets[static_cast<std::size_t>(t.monomial[var])].push_back(std::move(c));
    }
    std::vector<Polynomial> out;
    for (auto& b : buckets) out.push_back(from_terms(ctx_, std::move(b)));
    return out;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ctx_.size()) throw ContextMismatch("evaluation point has the wrong length");
    Rational acc = 0;
    for (const auto& t : terms_) {
      Rational v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (t.monomial[i] > 0) v *= lndfilt::pow(point[i], t.monomial[i]);
      }
      acc += v;
    }
    return acc;
  }

  // Scales so that the leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return (1 / terms_.front().coeff) * *this;
  }

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  // Total order on polynomials of one context, for use as map keys.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = grlex_compare(a.terms_[i].monomial, b.terms_[i].monomial);
      if (c != 0) return c < 0;
      if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.size() < b.size();
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("polynomials belong to different variable contexts");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, int sign) {
    check_same(a, b);
    Polynomial r(a.ctx_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = grlex_compare(a.terms_[i].monomial, b.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (sign < 0) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        Rational s = a.terms_[i].coeff;
        if (sign > 0) s += b.terms_[j].coeff;
        else s -= b.terms_[j].coeff;
        if (s != 0) r.terms_.push_back({a.terms_[i].monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VariableContext ctx_;
  std::vector<Term> terms_;
};

inline std::string monomial_to_string(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// Printer for the expression grammar: "p/q" rationals, explicit '*', '^'.
inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += monomial_to_string(t.monomial, ctx_);
    }
  }
  return out;
}

// Weighted degree: max over terms of sum w_i * e_i; -infinity for zero.
inline Degree weighted_degree(const Polynomial& p, const WeightVector& w) {
  if (w.size() != p.context().size()) throw ContextMismatch("weight vector length does not match the context");
  Degree d = Degree::minus_infinity();
  for (const auto& t : p.terms()) d = max(d, Degree(w.degree(t.monomial)));
  return d;
}

// Sum of the terms of maximal weighted degree.
inline Polynomial top_form(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) throw PreconditionError("top form of the zero polynomial");
  long top = weighted_degree(p, w).value();
  std::vector<Term> keep;
  for (const auto& t : p.terms()) {
    if (w.degree(t.monomial) == top) keep.push_back(t);
  }
  return Polynomial::from_terms(p.context(), std::move(keep));
}

inline bool is_homogeneous(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) return true;
  long d = w.degree(p.terms().front().monomial);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const Term& t) { return w.degree(t.monomial) == d; });
}

// a / b when b divides a exactly (single-divisor division on grlex
// leading terms, which succeeds precisely in that case).
inline std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("division across contexts");
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  const Term& lb = b.leading_term();
  Polynomial r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
    Term t{lr.monomial / lb.monomial, lr.coeff / lb.coeff};
    r -= b.multiply_monomial(t.monomial, t.coeff);
    q.push_back(std::move(t));
  }
  return Polynomial::from_terms(a.context(), std::move(q));
}

}  // namespace lndfilt
