#pragma once

// B = Q[x1..xn]/I with a fixed Groebner basis, so that equality in B is
// decided by comparing normal forms.

#include <memory>
#include <string>
#include <vector>

#include "lndfilt/groebner.hpp"
#include "lndfilt/parse.hpp"

namespace lndfilt {

class RingPresentation {
 public:
  // The basis is computed eagerly; afterwards the presentation is immutable.
  RingPresentation(VariableContext ctx, std::vector<Polynomial> relations,
                   MonomialOrder order = MonomialOrder::grlex(), std::size_t step_budget = kDefaultStepBudget)
      : data_(std::make_shared<Data>(Data{ctx, Ideal(ctx, std::move(relations)), std::move(order)})) {
    data_->relations = groebner(data_->relations, data_->order, step_budget);
  }
  explicit RingPresentation(VariableContext ctx) : RingPresentation(std::move(ctx), {}) {}

  const VariableContext& context() const { return data_->ctx; }
  std::size_t size() const { return data_->ctx.size(); }
  const Ideal& relations() const { return data_->relations; }
  const MonomialOrder& order() const { return data_->order; }
  const GroebnerBasis& basis() const { return *data_->relations.basis(); }
  bool is_free() const { return data_->relations.is_zero(); }

  Polynomial normal_form(const Polynomial& p, std::size_t step_budget = kDefaultStepBudget) const {
    return basis().reduce(p, step_budget);
  }
  bool equal(const Polynomial& a, const Polynomial& b) const { return normal_form(a - b).is_zero(); }
  bool is_zero(const Polynomial& a) const { return normal_form(a).is_zero(); }

  Polynomial var(std::size_t i) const { return Polynomial::variable(context(), i); }
  Polynomial var(std::string_view name) const { return Polynomial::variable(context(), name); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(context(), c); }
  Polynomial zero() const { return Polynomial(context()); }
  Polynomial parse(std::string_view text) const { return parse_polynomial(text, context()); }

  std::string to_string() const {
    std::string s = "Q[";
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + context().name(i);
    s += "]";
    if (!is_free()) s += "/" + relations().to_string();
    return s;
  }

  // Two presentations are the same ring when they share the context and
  // generate the same ideal.
  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    if (a.data_ == b.data_) return true;
    return a.context() == b.context() &&
           a.basis().polynomials() == groebner_basis(b.relations(), a.order());
  }

 private:
  struct Data {
    VariableContext ctx;
    Ideal relations;
    MonomialOrder order;
  };
  std::shared_ptr<Data> data_;
};

}  // namespace lndfilt
