#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "isotypic/group.hpp"

namespace isotypic {

struct Subgroup {
  std::vector<Element> members;     ///< sorted, always contains 0
  std::vector<Element> generators;  ///< greedy generating set over ascending members
  bool canonical = false;           ///< true for the stored representative of its class

  std::size_t order() const { return members.size(); }
  bool contains(Element a) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Smallest subgroup containing `elems`.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& elems);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// c * H * c^-1.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Element c);
/// Some c with c H c^-1 contained in N, if any (least such c).
std::optional<Element> conjugate_into(const FiniteGroup& g, const Subgroup& h, const Subgroup& n);

/// Subgroups of G up to conjugacy, found by repeatedly extending class
/// representatives by elements of prime-power order. Classes are sorted by
/// (order, canonical member list); the canonical member of a class is its
/// lexicographically least conjugate.
class SubgroupLattice {
 public:
  SubgroupLattice(GroupPtr group, const Bounds& bounds = {});

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const Subgroup& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<Subgroup>& classes() const { return classes_; }
  /// Number of conjugates in class i.
  std::size_t class_length(std::size_t i) const { return lengths_[i]; }

  /// Class index of any subgroup of G.
  std::size_t class_of(const Subgroup& h) const;
  Subgroup canonicalize(const Subgroup& h) const { return classes_[class_of(h)]; }

  /// Element c with c * classes_[i] * c^-1 inside classes_[j], if any.
  std::optional<Element> contained_up_to_conjugacy(std::size_t i, std::size_t j) const { return containment_[i][j]; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept;
  };
  std::vector<std::uint64_t> key(const std::vector<Element>& members) const;

  GroupPtr group_;
  std::vector<Subgroup> classes_;
  std::vector<std::size_t> lengths_;
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, KeyHash> index_;
  std::vector<std::vector<std::optional<Element>>> containment_;
};

}  // namespace isotypic
