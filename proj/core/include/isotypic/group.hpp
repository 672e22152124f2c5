#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isotypic {

using Element = std::uint32_t;

/// Size limits. These are configuration, not constants of the algorithms.
struct Bounds {
  std::size_t max_group_order = 10000;    ///< coset enumeration / closure
  std::size_t max_lattice_order = 2000;   ///< subgroup lattice search
  std::size_t coset_ceiling_factor = 10;  ///< live+dead cosets allowed per unit of max_group_order
  int max_intersection_arity = 4;
};

struct ConjugacyClass {
  Element representative = 0;    ///< least member
  std::vector<Element> members;  ///< sorted
};

/// A word in the generators: 1-based signed generator indices (negative = inverse).
using Word = std::vector<int>;

/// A finite group stored by its full multiplication table. Element 0 is the
/// identity. Immutable after construction; conjugacy classes are computed
/// eagerly.
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element power(Element a, long k) const;
  /// h * g * h^-1
  Element conjugate(Element g, Element h) const { return mul(mul(h, g), inv(h)); }
  std::uint32_t element_order(Element a) const { return orders_[a]; }
  std::uint32_t exponent() const { return exponent_; }
  bool is_abelian() const;

  /// Generators in input order and their display names.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  /// Shortlex word over the generators (BFS order), e.g. "x^3*y"; "1" for the identity.
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(Element a) const { return class_of_[a]; }

  /// Row-major copy of the table (for export).
  std::vector<std::vector<Element>> cayley_table() const;

  /// Evaluates a word given as generator indices.
  Element evaluate(const Word& w) const;
  /// Parses "x^3*y^-1*(x*y)^2", "1" / "identity" / "id" for the identity.
  Element parse_element(const std::string& text) const;

  // ---- construction -------------------------------------------------------

  /// Finitely presented group, enumerated by HLT coset enumeration over the
  /// trivial subgroup. `generator_names` may be empty (defaults g1, g2, ...).
  static std::shared_ptr<const FiniteGroup> from_presentation(std::size_t generators, const std::vector<Word>& relators,
                                                              std::vector<std::string> generator_names = {},
                                                              const Bounds& bounds = {});

  /// Permutation group on {0..n-1}; composition is left-to-right (apply the
  /// first factor, then the second).
  static std::shared_ptr<const FiniteGroup> from_permutations(const std::vector<std::vector<std::uint32_t>>& perms,
                                                              std::vector<std::string> generator_names = {},
                                                              const Bounds& bounds = {});

  /// Validates the group axioms exhaustively; identity must be element 0.
  static std::shared_ptr<const FiniteGroup> from_cayley_table(const std::vector<std::vector<Element>>& table,
                                                              std::vector<std::string> labels = {});

  /// Shared builder: `right_action[i][g]` is element i times generator g, with
  /// element 0 the identity. Elements are renumbered in BFS order.
  static std::shared_ptr<const FiniteGroup> from_generator_action(const std::vector<std::vector<std::uint32_t>>& right_action,
                                                                  std::vector<std::string> generator_names,
                                                                  const Bounds& bounds = {});

 private:
  FiniteGroup() = default;
  void finish_structure();

  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::uint32_t> orders_;
  std::uint32_t exponent_ = 1;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> labels_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Rational classes: conjugacy classes fused under g -> g^k, gcd(k, ord g) = 1.
/// Each entry lists conjugacy class indices.
std::vector<std::vector<std::size_t>> rational_fusion_classes(const FiniteGroup& g);

/// Parses a word such as "y^-1*x*y*x^-3" into generator indices.
Word parse_word(const std::string& text, const std::vector<std::string>& generator_names);

}  // namespace isotypic
