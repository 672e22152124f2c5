#pragma once

#include <vector>

#include "isotypic/cyclotomic.hpp"
#include "isotypic/group.hpp"
#include "isotypic/subgroups.hpp"

namespace isotypic {

/// Irreducible characters of a finite group. Columns follow the group's
/// conjugacy class order; all values live at the group exponent level.
class CharacterTable {
 public:
  /// Validates both orthogonality relations and the degree sum; failures
  /// name the offending pair of rows or columns.
  CharacterTable(GroupPtr group, std::vector<std::vector<CycValue>> rows);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int level() const { return level_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<CycValue>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<CycValue>>& rows() const { return rows_; }
  const CycValue& value(std::size_t chi, std::size_t cls) const { return rows_[chi][cls]; }
  const CycValue& at(std::size_t chi, Element g) const { return rows_[chi][group_->class_of(g)]; }
  long degree(std::size_t chi) const;
  /// Index of the row equal to `values`, if any.
  std::optional<std::size_t> find(const std::vector<CycValue>& values) const;

 private:
  GroupPtr group_;
  int level_;
  std::vector<std::vector<CycValue>> rows_;
};

/// Splits the class-sum algebra modulo a prime p = 1 (mod exponent) and lifts
/// the eigenvalue data to exact values. Rows: trivial character first, then
/// by (degree, lexicographic values).
CharacterTable compute_character_table(GroupPtr group);

/// The same rows in the canonical order used by compute_character_table.
std::vector<std::size_t> canonical_row_order(const CharacterTable& table);

/// (1/|G|) sum_g a(g) conj(b(g)) for class functions given per class.
CycValue inner_product(const FiniteGroup& g, const std::vector<CycValue>& a, const std::vector<CycValue>& b);

/// dim V^H = (1/|H|) sum_{h in H} chi(h); must be a non-negative integer.
long fixed_dim(const CharacterTable& table, std::size_t chi, const Subgroup& h);

}  // namespace isotypic
