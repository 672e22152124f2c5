#pragma once

#include <optional>
#include <vector>

#include "isotypic/character_table.hpp"
#include "isotypic/numfield.hpp"

namespace isotypic {

/// Ring embedding of the subfield of Q(zeta_e) generated by the declared
/// values into L, fixed by value -> image pairs and checked to be multiplicative
/// on a Q-basis of products.
class ValueEmbedding {
 public:
  ValueEmbedding(NumFieldPtr field, int level, std::vector<std::pair<CycValue, NumFieldValue>> generators);

  /// Image of v; nullopt when v lies outside the generated subfield.
  std::optional<NumFieldValue> map(const CycValue& v) const;
  NumFieldValue map_or_throw(const CycValue& v) const;
  const NumFieldPtr& field() const { return field_; }

 private:
  std::optional<std::vector<Rational>> coordinates(const CycValue& v) const;

  NumFieldPtr field_;
  int level_;
  std::vector<std::vector<Rational>> basis_;  ///< coefficient vectors at level_
  std::vector<NumFieldValue> images_;
};

/// A representation of G over a declared number field L, given by generator
/// matrices and extended to all elements along BFS words. Multiplicativity is
/// validated on the whole multiplication table at construction.
class MatrixRep {
 public:
  using Matrix = std::vector<std::vector<NumFieldValue>>;

  MatrixRep(GroupPtr group, NumFieldPtr field, std::vector<Matrix> generator_images);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const NumFieldPtr& field() const { return field_; }
  std::size_t degree() const { return n_; }
  const Matrix& image(Element g) const { return images_[g]; }
  NumFieldValue trace(Element g) const;

  /// Character of the table whose values embed to the traces; throws
  /// "representation inconsistent with character" if `chi` is given and fails.
  std::size_t link_character(const CharacterTable& table, const ValueEmbedding& embedding,
                             std::optional<std::size_t> chi = std::nullopt) const;

 private:
  GroupPtr group_;
  NumFieldPtr field_;
  std::size_t n_ = 0;
  std::vector<Matrix> images_;
};

MatrixRep::Matrix matmul(const MatrixRep::Matrix& a, const MatrixRep::Matrix& b);

}  // namespace isotypic
