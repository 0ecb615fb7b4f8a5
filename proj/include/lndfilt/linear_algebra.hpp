#pragma once

// Dense exact linear algebra over Q: reduced row echelon form, nullspace
// and particular solutions.

#include <optional>
#include <utility>
#include <vector>

#include "lndfilt/rational.hpp"

namespace lndfilt {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// In-place reduced row echelon form. Returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k < cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (a[row][k] != 0) a[r][k] -= f * a[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  return pivots;
}

// Basis of {v : A v = 0}, one vector per free column.
inline std::vector<RatVector> nullspace(RatMatrix a, std::size_t cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some x with A x = b, or nothing when the system is inconsistent.
inline std::optional<RatVector> solve(RatMatrix a, const RatVector& b, std::size_t cols) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

inline std::size_t rank(RatMatrix a, std::size_t cols) { return rref(a, cols).size(); }

}  // namespace lndfilt
