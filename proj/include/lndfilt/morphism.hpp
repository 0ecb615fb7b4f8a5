#pragma once

// Algebra morphisms between presented rings, given by the images of the
// source generators, and conjugation of derivations by automorphisms.

#include <memory>
#include <string>
#include <vector>

#include "lndfilt/derivation.hpp"

namespace lndfilt {

class RingMorphism {
 public:
  RingMorphism(RingPresentation source, RingPresentation target, std::vector<Polynomial> images)
      : source_(std::move(source)), target_(std::move(target)) {
    if (images.size() != source_.size()) throw PreconditionError("a morphism needs one image per source variable");
    for (auto& im : images) {
      if (!(im.context() == target_.context())) throw ContextMismatch("morphism image lives in a different context");
      images_.push_back(target_.normal_form(im));
    }
  }

  static RingMorphism identity(const RingPresentation& ring) {
    std::vector<Polynomial> ims;
    for (std::size_t i = 0; i < ring.size(); ++i) ims.push_back(ring.var(i));
    return RingMorphism(ring, ring, std::move(ims));
  }

  const RingPresentation& source() const { return source_; }
  const RingPresentation& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }

  const RingMorphism* inverse() const { return inverse_.get(); }
  void set_inverse(const RingMorphism& inv) {
    if (!(inv.source() == target_) || !(inv.target() == source_)) {
      throw PreconditionError("inverse morphism has mismatched source/target");
    }
    inverse_ = std::make_shared<RingMorphism>(inv.source_, inv.target_, inv.images_);
  }

  Polynomial operator()(const Polynomial& b) const {
    if (!(b.context() == source_.context())) throw ContextMismatch("morphism applied to a foreign polynomial");
    return target_.normal_form(b.substitute(images_, target_.context()));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ", ";
      s += source_.context().name(i) + " -> " + images_[i].to_string();
    }
    return s;
  }

 private:
  RingPresentation source_, target_;
  std::vector<Polynomial> images_;
  std::shared_ptr<const RingMorphism> inverse_;
};

// True iff every source relation is sent into the target relation ideal.
inline bool check_morphism(const RingMorphism& f) {
  for (const auto& g : f.source().relations().generators()) {
    if (!f(g).is_zero()) return false;
  }
  return true;
}

// (g o f)(v) = g(f(v)).
inline RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
  if (!(f.target() == g.source())) throw PreconditionError("composition: target of f is not the source of g");
  std::vector<Polynomial> ims;
  for (const auto& im : f.images()) ims.push_back(g(im));
  return RingMorphism(f.source(), g.target(), std::move(ims));
}

// Both compositions fix every generator modulo the relations.
inline bool check_inverse(const RingMorphism& f, const RingMorphism& g) {
  auto fg = compose(f, g);
  auto gf = compose(g, f);
  for (std::size_t i = 0; i < gf.images().size(); ++i) {
    if (!(gf.image(i) == f.source().normal_form(f.source().var(i)))) return false;
  }
  for (std::size_t i = 0; i < fg.images().size(); ++i) {
    if (!(fg.image(i) == g.source().normal_form(g.source().var(i)))) return false;
  }
  return true;
}

// A verified automorphism: a morphism of the ring to itself with a
// verified two-sided inverse.
inline bool is_verified_automorphism(const RingMorphism& a) {
  return a.source() == a.target() && a.inverse() && check_morphism(a) && check_morphism(*a.inverse()) &&
         check_inverse(a, *a.inverse());
}

// D_alpha = alpha^{-1} o D o alpha.
inline Derivation conjugate(const Derivation& d, const RingMorphism& alpha) {
  if (!alpha.inverse()) throw PreconditionError("conjugation needs an automorphism with a known inverse");
  if (!(alpha.source() == d.ring()) || !(alpha.target() == d.ring())) {
    throw PreconditionError("conjugation: automorphism and derivation live on different rings");
  }
  const RingMorphism& inv = *alpha.inverse();
  std::vector<Polynomial> ims;
  for (const auto& av : alpha.images()) ims.push_back(inv(d.apply(av)));
  return Derivation(d.ring(), std::move(ims));
}

}  // namespace lndfilt
