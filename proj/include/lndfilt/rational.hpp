#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace lndfilt {

// Exact rationals. mpq_class keeps values canonical (coprime, positive
// denominator) as long as every construction from a numerator/denominator
// pair goes through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational pow(const Rational& base, long exponent) {
  Rational result(1);
  if (exponent < 0) {
    Rational inv = 1 / base;
    mpz_pow_ui(result.get_num_mpz_t(), inv.get_num_mpz_t(), static_cast<unsigned long>(-exponent));
    mpz_pow_ui(result.get_den_mpz_t(), inv.get_den_mpz_t(), static_cast<unsigned long>(-exponent));
  } else {
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  }
  result.canonicalize();
  return result;
}

// Exact k-th root of q in Q, if one exists.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return q;
  if (q < 0 && k % 2 == 0) return std::nullopt;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  Rational r = make_rational(rn, rd);
  if (q < 0) r = -r;
  return r;
}

// Rational roots of a univariate polynomial with coefficients listed from
// the constant term upward. Uses the rational root theorem after clearing
// denominators; duplicates are removed.
inline std::vector<Rational> rational_roots(std::vector<Rational> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::vector<Rational> roots;
  if (coeffs.size() <= 1) return roots;
  std::size_t shift = 0;
  while (coeffs[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  std::vector<Rational> reduced(coeffs.begin() + static_cast<long>(shift), coeffs.end());
  if (reduced.size() <= 1) return roots;
  Integer lcm_den = 1;
  for (const auto& c : reduced) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : reduced) {
    Rational scaled = c * lcm_den;
    ints.push_back(scaled.get_num());
  }
  auto divisors = [](Integer value) {
    value = abs(value);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= value; ++d) {
      if (value % d == 0) {
        out.push_back(d);
        if (d * d != value) out.push_back(value / d);
      }
    }
    return out;
  };
  auto evaluate = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const auto& p : divisors(ints.front())) {
    for (const auto& q : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational candidate = make_rational(p * sign, q);
        if (evaluate(candidate) == 0) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || r == candidate;
          if (!seen) roots.push_back(candidate);
        }
      }
    }
  }
  return roots;
}

}  // namespace lndfilt
