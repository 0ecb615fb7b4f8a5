#pragma once

// Derivations of a presented algebra B = Q[x]/I, given by the images of
// the generators. Application extends by the Leibniz rule and reduces to
// normal form, so every value handed out is canonical in B.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lndfilt/ring.hpp"

namespace lndfilt {

class Derivation {
 public:
  // Throws NotWellDefined when some relation generator is not sent into I.
  Derivation(RingPresentation ring, std::vector<Polynomial> images) : ring_(std::move(ring)) {
    if (images.size() != ring_.size()) {
      throw PreconditionError("a derivation needs one image per variable (" + std::to_string(ring_.size()) +
                              "), got " + std::to_string(images.size()));
    }
    for (auto& im : images) {
      if (!(im.context() == ring_.context())) throw ContextMismatch("derivation image lives in a different context");
      images_.push_back(ring_.normal_form(im));
    }
    for (const auto& g : ring_.relations().generators()) {
      Polynomial dg = leibniz(g);
      if (!ring_.is_zero(dg)) {
        throw NotWellDefined("not well-defined on quotient: D(" + g.to_string() + ") = " +
                                 ring_.normal_form(dg).to_string() + " is not in the relation ideal",
                             g.to_string());
      }
    }
  }

  static Derivation zero(const RingPresentation& ring) {
    return Derivation(ring, std::vector<Polynomial>(ring.size(), ring.zero()));
  }

  const RingPresentation& ring() const { return ring_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  bool is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) { return p.is_zero(); });
  }

  Polynomial apply(const Polynomial& b) const { return ring_.normal_form(leibniz(b)); }

  Polynomial iterate(Polynomial b, std::size_t k) const {
    b = ring_.normal_form(b);
    for (std::size_t i = 0; i < k && !b.is_zero(); ++i) b = apply(b);
    return b;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].is_zero()) continue;
      if (!s.empty()) s += ", ";
      s += ring_.context().name(i) + " -> " + images_[i].to_string();
    }
    return s.empty() ? "0" : s;
  }

 private:
  // sum_i dp/dx_i * D(x_i), unreduced.
  Polynomial leibniz(const Polynomial& p) const {
    if (!(p.context() == ring_.context())) throw ContextMismatch("derivation applied to a foreign polynomial");
    Polynomial acc = ring_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i].is_zero() || !p.involves(i)) continue;
      acc = acc + p.partial_derivative(i) * images_[i];
    }
    return acc;
  }

  RingPresentation ring_;
  std::vector<Polynomial> images_;
};

inline Polynomial apply(const Derivation& d, const Polynomial& b) { return d.apply(b); }
inline Polynomial iterate(const Derivation& d, const Polynomial& b, std::size_t k) { return d.iterate(b, k); }

inline bool kernel_member(const Derivation& d, const Polynomial& b) { return d.apply(b).is_zero(); }

inline bool is_local_slice(const Derivation& d, const Polynomial& s) {
  Polynomial ds = d.apply(s);
  return !ds.is_zero() && d.apply(ds).is_zero();
}

// Iterates above this many terms are treated as a resource cap rather
// than evidence either way.
inline constexpr std::size_t kIterateTermCap = 20'000;

struct NilpotencyCertificate {
  std::vector<long> orders;  // orders[i] = deg of x_i: min k with D^{k+1}(x_i) = 0
  std::size_t bound = 0;
};

struct NilpotencyVerdict {
  std::optional<NilpotencyCertificate> certificate;  // set iff locally nilpotent
  std::string detail;                                 // why not, when unset
  bool proven_not_nilpotent = false;                  // an iterate repeats up to a scalar

  bool nilpotent() const { return certificate.has_value(); }
};

namespace detail {

// Index of the first earlier iterate that p is a nonzero multiple of.
inline std::optional<std::size_t> proportional_to_earlier(const std::vector<Polynomial>& history, const Polynomial& p) {
  for (std::size_t j = 0; j < history.size(); ++j) {
    const auto& h = history[j];
    if (h.size() != p.size() || h.is_zero()) continue;
    Rational c = p.terms().front().coeff / h.terms().front().coeff;
    if (c * h == p) return j;
  }
  return std::nullopt;
}

}  // namespace detail

// Checks D^{k}(x_i) = 0 for some k <= bound + 1 on each generator; that
// suffices for local nilpotency of the whole finitely generated algebra.
// A generator whose iterate becomes a scalar multiple of an earlier iterate
// can never reach zero, which is reported as a proof of non-nilpotence.
inline NilpotencyVerdict is_locally_nilpotent(const Derivation& d, std::size_t bound) {
  if (bound < 1) throw PreconditionError("nilpotency bound must be at least 1");
  NilpotencyVerdict v;
  NilpotencyCertificate cert;
  cert.bound = bound;
  const auto& ctx = d.ring().context();
  for (std::size_t i = 0; i < d.ring().size(); ++i) {
    Polynomial cur = d.ring().normal_form(d.ring().var(i));
    if (cur.is_zero()) {
      cert.orders.push_back(-1);
      continue;
    }
    std::vector<Polynomial> history{cur};
    long order = -1;
    for (std::size_t k = 0; k <= bound; ++k) {
      Polynomial next = d.apply(cur);
      if (next.is_zero()) {
        order = static_cast<long>(k);
        break;
      }
      if (auto j = detail::proportional_to_earlier(history, next)) {
        v.proven_not_nilpotent = true;
        v.detail = "D^" + std::to_string(k + 1) + "(" + ctx.name(i) + ") is a multiple of D^" + std::to_string(*j) +
                   "(" + ctx.name(i) + ")";
        return v;
      }
      if (next.size() > kIterateTermCap) {
        v.detail = "iterates of " + ctx.name(i) + " exceed " + std::to_string(kIterateTermCap) + " terms";
        return v;
      }
      history.push_back(next);
      cur = std::move(next);
    }
    if (order < 0) {
      v.detail = "D^k(" + ctx.name(i) + ") != 0 for all k <= " + std::to_string(bound + 1);
      return v;
    }
    cert.orders.push_back(order);
  }
  v.certificate = std::move(cert);
  return v;
}

// deg_D(b) = min{i : D^{i+1}(b) = 0}, -infinity for b = 0, by iteration.
inline Degree deg_lnd(const Derivation& d, const Polynomial& b, std::size_t bound) {
  Polynomial cur = d.ring().normal_form(b);
  if (cur.is_zero()) return Degree::minus_infinity();
  for (std::size_t k = 0; k <= bound; ++k) {
    Polynomial next = d.apply(cur);
    if (next.is_zero()) return Degree(static_cast<long>(k));
    cur = std::move(next);
  }
  throw BoundExceeded("D^k(" + b.to_string() + ") != 0 for all k <= " + std::to_string(bound + 1) +
                      "; the derivation is not locally nilpotent or the bound is too small");
}

// Iteration bound for an element: the larger of
//   4 * (max generator order + 1) * (term count), and
//   max over terms of sum e_i * order_i, plus one (Leibniz: a monomial of
//   the generators has degree at most that sum).
inline std::size_t default_iteration_bound(const NilpotencyCertificate& cert, const Polynomial& b) {
  long max_order = 0;
  for (auto o : cert.orders) max_order = std::max(max_order, o);
  std::size_t heuristic = 4 * static_cast<std::size_t>(max_order + 1) * std::max<std::size_t>(b.size(), 1);
  long leibniz = 0;
  for (const auto& t : b.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) s += t.monomial[i] * std::max<long>(cert.orders[i], 0);
    leibniz = std::max(leibniz, s);
  }
  return std::max(heuristic, static_cast<std::size_t>(leibniz + 1));
}

// deg_D for a certified locally nilpotent derivation, with the default
// bound and a synchronized cache of normal forms already evaluated.
class LndDegree {
 public:
  LndDegree(Derivation d, NilpotencyCertificate cert) : d_(std::move(d)), cert_(std::move(cert)) {}

  // Certifies nilpotency first; throws BoundExceeded when that fails.
  static LndDegree certify(const Derivation& d, std::size_t nilp_bound) {
    auto v = is_locally_nilpotent(d, nilp_bound);
    if (!v.nilpotent()) throw BoundExceeded("derivation is not locally nilpotent within the bound: " + v.detail);
    return LndDegree(d, *v.certificate);
  }

  const Derivation& derivation() const { return d_; }
  const NilpotencyCertificate& certificate() const { return cert_; }

  Degree operator()(const Polynomial& b) const {
    Polynomial nf = d_.ring().normal_form(b);
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->values.find(nf);
      if (it != cache_->values.end()) return it->second;
    }
    Degree deg = deg_lnd(d_, nf, default_iteration_bound(cert_, b));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->values.emplace(std::move(nf), deg);
    return deg;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<Polynomial, Degree> values;
  };
  Derivation d_;
  NilpotencyCertificate cert_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace lndfilt
