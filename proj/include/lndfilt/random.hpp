#pragma once

// Seeded random polynomials for the property checks. All sampling goes
// through std::mt19937_64 so runs are reproducible from the seed.

#include <random>
#include <vector>

#include "lndfilt/polynomial.hpp"

namespace lndfilt {

using Rng = std::mt19937_64;

struct RandomShape {
  int max_terms = 4;
  int max_degree = 3;     // total degree of each monomial
  int coeff_bound = 5;    // numerators in [-bound, bound]
  int max_denominator = 1;
  std::vector<std::size_t> variables;  // empty = all variables
};

inline Rational random_rational(Rng& rng, int bound, int max_den, bool nonzero = true) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, std::max(1, max_den));
  for (;;) {
    int n = num(rng);
    if (nonzero && n == 0) continue;
    return make_rational(n, den(rng));
  }
}

inline Monomial random_monomial(const VariableContext& ctx, Rng& rng, int max_degree,
                                const std::vector<std::size_t>& vars) {
  Monomial m(ctx.size());
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  int d = deg(rng);
  for (int k = 0; k < d; ++k) m[vars[pick(rng)]] += 1;
  return m;
}

inline Polynomial random_polynomial(const VariableContext& ctx, Rng& rng, const RandomShape& shape = {}) {
  std::vector<std::size_t> vars = shape.variables;
  if (vars.empty()) {
    for (std::size_t i = 0; i < ctx.size(); ++i) vars.push_back(i);
  }
  std::uniform_int_distribution<int> count(1, shape.max_terms);
  int n = count(rng);
  std::vector<Term> terms;
  for (int k = 0; k < n; ++k) {
    terms.push_back({random_monomial(ctx, rng, shape.max_degree, vars),
                     random_rational(rng, shape.coeff_bound, shape.max_denominator)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(const VariableContext& ctx, Rng& rng, const RandomShape& shape = {}) {
  for (;;) {
    Polynomial p = random_polynomial(ctx, rng, shape);
    if (!p.is_zero()) return p;
  }
}

}  // namespace lndfilt
