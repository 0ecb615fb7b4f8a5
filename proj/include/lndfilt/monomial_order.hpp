#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "lndfilt/polynomial.hpp"

namespace lndfilt {

// A monomial order given as a stack of integer weight rows followed by a
// lexicographic tiebreak on a declared variable permutation. An empty row
// stands for the all-ones row (total degree).
//
// Every order built by the factories below is a multiplicative well-order:
// the first row is non-negative and the final lex tiebreak is total.
class MonomialOrder {
 public:
  enum class Kind { lex, grlex, weight_refined, elimination };

  // permutation[k] is the variable compared k-th by the lex tiebreak;
  // empty means declaration order.
  static MonomialOrder lex(std::vector<std::size_t> permutation = {}) {
    return MonomialOrder(Kind::lex, {}, std::move(permutation));
  }
  static MonomialOrder grlex(std::vector<std::size_t> permutation = {}) {
    return MonomialOrder(Kind::grlex, {Row{}}, std::move(permutation));
  }
  // Compare w-degree first, break ties by lex on the permutation.
  static MonomialOrder weight_refined(const WeightVector& w, std::vector<std::size_t> permutation = {}) {
    return MonomialOrder(Kind::weight_refined, {w.values()}, std::move(permutation));
  }
  // Block order: any monomial involving a dropped variable beats every
  // monomial free of them.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& drop) {
    Row indicator(nvars, 0);
    for (auto d : drop) indicator.at(d) = 1;
    return MonomialOrder(Kind::elimination, {indicator, Row{}}, {});
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  // -1, 0 or +1.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& row : rows_) {
      long da = 0, db = 0;
      if (row.empty()) {
        da = a.total_degree();
        db = b.total_degree();
      } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
          da += row[i] * a[i];
          db += row[i] * b[i];
        }
      }
      if (da != db) return da < db ? -1 : 1;
    }
    if (perm_.empty()) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
    } else {
      for (auto i : perm_) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  // True when the order coincides with the canonical storage order of
  // Polynomial, so no re-sorting is needed.
  bool is_canonical() const { return kind_ == Kind::grlex && perm_.empty(); }

  std::string describe() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grlex: return "grlex";
      case Kind::weight_refined: return "weight-refined";
      case Kind::elimination: return "elimination";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.rows_ == b.rows_ && a.perm_ == b.perm_;
  }

 private:
  using Row = std::vector<long>;

  MonomialOrder(Kind kind, std::vector<Row> rows, std::vector<std::size_t> perm)
      : kind_(kind), rows_(std::move(rows)), perm_(std::move(perm)) {
    if (!perm_.empty()) {
      std::vector<std::size_t> sorted = perm_;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) throw PreconditionError("lex tiebreak is not a permutation");
      }
    }
  }

  Kind kind_;
  std::vector<Row> rows_;
  std::vector<std::size_t> perm_;
};

}  // namespace lndfilt
