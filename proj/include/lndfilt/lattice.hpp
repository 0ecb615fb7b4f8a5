#pragma once

// Integer lattices: Smith normal form with transforms, and the primality
// test for binomial ideals (lattice ideal + saturated lattice).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lndfilt/groebner.hpp"

namespace lndfilt {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// U * A * V = S with U, V unimodular and S diagonal, each diagonal entry
// dividing the next. Nonzero diagonal entries are positive.
struct SmithForm {
  IntMatrix S, U, V;
  std::vector<Integer> divisors;  // nonzero diagonal entries, in order
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithForm f{a, identity_matrix(rows), identity_matrix(cols), {}};
  auto& S = f.S;
  auto& U = f.U;
  auto& V = f.V;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(S[i], S[j]);
    std::swap(U[i], U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : S) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
  };
  // row_j -= q * row_i
  auto add_row = [&](std::size_t j, std::size_t i, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c) S[j][c] -= q * S[i][c];
    for (std::size_t c = 0; c < rows; ++c) U[j][c] -= q * U[i][c];
  };
  auto add_col = [&](std::size_t j, std::size_t i, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) S[r][j] -= q * S[r][i];
    for (std::size_t r = 0; r < cols; ++r) V[r][j] -= q * V[r][i];
  };

  bool exhausted = false;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (S[r][c] != 0 && (pr == rows || abs(S[r][c]) < abs(S[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S[r][t].get_mpz_t(), S[t][t].get_mpz_t());
        if (q != 0) add_row(r, t, q);
        if (S[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), S[t][c].get_mpz_t(), S[t][t].get_mpz_t());
        if (q != 0) add_col(c, t, q);
        if (S[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (S[r][c] % S[t][t] != 0) {
            add_row(t, r, Integer(-1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (exhausted) break;
    if (S[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) S[t][c] = -S[t][c];
      for (std::size_t c = 0; c < rows; ++c) U[t][c] = -U[t][c];
    }
  }
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    if (S[i][i] != 0) f.divisors.push_back(S[i][i]);
  }
  return f;
}

// Independent check of the Smith form: d_k = gcd of all k x k minors and the
// elementary divisors are d_k / d_{k-1}. Exponential, fine for tiny inputs.
inline Integer determinant(IntMatrix m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Integer term = m[0][c] * determinant(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

namespace detail {

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<Integer> divisors_by_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    detail::subsets(rows, k, 0, cur, rs);
    detail::subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        IntMatrix m;
        for (auto i : r) {
          std::vector<Integer> row;
          for (auto j : c) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = gcd(g, determinant(m));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

enum class PrimeVerdict { prime, not_prime, inapplicable };

inline std::string to_string(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::prime: return "prime";
    case PrimeVerdict::not_prime: return "not-prime";
    case PrimeVerdict::inapplicable: return "inapplicable";
  }
  return "?";
}

struct BinomialPrimeReport {
  PrimeVerdict verdict = PrimeVerdict::inapplicable;
  IntMatrix lattice;                  // rows = exponent differences
  std::vector<Integer> divisors;      // Smith elementary divisors
  std::string reason;
};

// Primality of a binomial ideal in characteristic zero.
inline BinomialPrimeReport binomial_prime(const Ideal& ideal, std::size_t step_budget = kDefaultStepBudget) {
  BinomialPrimeReport rep;
  const auto& ctx = ideal.context();
  if (ideal.is_zero()) {
    rep.verdict = PrimeVerdict::prime;
    rep.reason = "zero ideal";
    return rep;
  }
  auto gb = groebner_basis(ideal, MonomialOrder::grlex(), step_budget);
  if (gb.size() == 1 && gb[0].is_constant()) {
    rep.verdict = PrimeVerdict::not_prime;
    rep.reason = "unit ideal";
    return rep;
  }
  for (const auto& g : gb) {
    bool binomial = g.size() == 2 && g.terms()[0].coeff == 1 && g.terms()[1].coeff == -1;
    if (!binomial) {
      rep.reason = "basis element " + g.to_string() + " is not a pure binomial";
      return rep;
    }
    std::vector<Integer> row(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      row[i] = Integer(g.terms()[0].monomial[i]) - Integer(g.terms()[1].monomial[i]);
    }
    rep.lattice.push_back(std::move(row));
  }
  Polynomial all = Polynomial::constant(ctx, 1);
  for (std::size_t i = 0; i < ctx.size(); ++i) all = all * Polynomial::variable(ctx, i);
  if (!same_ideal(saturate(ideal, all, step_budget), ideal, step_budget)) {
    rep.verdict = PrimeVerdict::not_prime;
    rep.reason = "not saturated with respect to the product of the variables";
    return rep;
  }
  rep.divisors = smith_normal_form(rep.lattice).divisors;
  bool saturated = std::all_of(rep.divisors.begin(), rep.divisors.end(), [](const Integer& d) { return d == 1; });
  rep.verdict = saturated ? PrimeVerdict::prime : PrimeVerdict::not_prime;
  rep.reason = saturated ? "lattice ideal of a saturated lattice" : "exponent lattice is not saturated";
  return rep;
}

}  // namespace lndfilt
