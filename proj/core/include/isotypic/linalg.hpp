#pragma once

#include <optional>
#include <vector>

#include "isotypic/errors.hpp"
#include "isotypic/scalar.hpp"

namespace isotypic {

/// Incrementally built row-echelon basis over an exact field. Pivots are the
/// first nonzero entry of each reduced vector and are normalized to one.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Eliminates the pivot columns of every stored row from v.
  void reduce(std::vector<S>& v) const {
    for (const auto& row : rows_) {
      if (is_zero(v[row.pivot])) continue;
      S factor = v[row.pivot];
      for (std::size_t k = row.pivot; k < dim_; ++k) {
        if (!is_zero(row.v[k])) v[k] -= factor * row.v[k];
      }
    }
  }

  bool contains(std::vector<S> v) const {
    check(v);
    reduce(v);
    return all_zero(v);
  }

  /// Adds v when it is independent of the current rows; returns whether it was.
  bool insert(std::vector<S> v) {
    check(v);
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < dim_ && is_zero(v[pivot])) ++pivot;
    if (pivot == dim_) return false;
    S inv = inverse(v[pivot]);
    for (std::size_t k = pivot; k < dim_; ++k) {
      if (!is_zero(v[k])) v[k] *= inv;
    }
    rows_.push_back({pivot, std::move(v)});
    return true;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<S> v;
  };

  void check(const std::vector<S>& v) const {
    if (v.size() != dim_) throw InvariantError("vector length does not match the ambient dimension");
  }
  static bool all_zero(const std::vector<S>& v) {
    for (const auto& x : v) {
      if (!is_zero(x)) return false;
    }
    return true;
  }

  std::size_t dim_;
  std::vector<Row> rows_;
};

/// Coefficients c with sum_i c_i * vectors[i] = target, or nullopt when the
/// target is outside the span. Dependent inputs receive coefficient zero.
template <class S>
std::optional<std::vector<S>> solve_combination(const std::vector<std::vector<S>>& vectors, std::vector<S> target) {
  const std::size_t r = vectors.size();
  const std::size_t dim = target.size();
  if (r == 0) {
    for (const auto& x : target) {
      if (!is_zero(x)) return std::nullopt;
    }
    return std::vector<S>{};
  }
  const S zero = zero_like(target.empty() ? vectors[0][0] : target[0]);
  const S one = one_like(zero);

  // Each stored row keeps the combination of inputs that produced it.
  struct Row {
    std::size_t pivot;
    std::vector<S> v;
    std::vector<S> combo;
  };
  std::vector<Row> rows;
  auto eliminate = [&](std::vector<S>& v, std::vector<S>& combo) {
    for (const auto& row : rows) {
      if (is_zero(v[row.pivot])) continue;
      S factor = v[row.pivot];
      for (std::size_t k = row.pivot; k < dim; ++k) {
        if (!is_zero(row.v[k])) v[k] -= factor * row.v[k];
      }
      for (std::size_t k = 0; k < r; ++k) {
        if (!is_zero(row.combo[k])) combo[k] -= factor * row.combo[k];
      }
    }
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (vectors[i].size() != dim) throw InvariantError("vector length mismatch in linear solve");
    std::vector<S> v = vectors[i];
    std::vector<S> combo(r, zero);
    combo[i] = one;
    eliminate(v, combo);
    std::size_t pivot = 0;
    while (pivot < dim && is_zero(v[pivot])) ++pivot;
    if (pivot == dim) continue;
    S inv = inverse(v[pivot]);
    for (auto& x : v) {
      if (!is_zero(x)) x *= inv;
    }
    for (auto& x : combo) {
      if (!is_zero(x)) x *= inv;
    }
    rows.push_back({pivot, std::move(v), std::move(combo)});
  }
  // target - sum factor_row * row = 0  =>  target = sum factor_row * combo_row.
  std::vector<S> result(r, zero);
  for (const auto& row : rows) {
    if (is_zero(target[row.pivot])) continue;
    S factor = target[row.pivot];
    for (std::size_t k = row.pivot; k < dim; ++k) {
      if (!is_zero(row.v[k])) target[k] -= factor * row.v[k];
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (!is_zero(row.combo[k])) result[k] += factor * row.combo[k];
    }
  }
  for (const auto& x : target) {
    if (!is_zero(x)) return std::nullopt;
  }
  return result;
}

}  // namespace isotypic
