#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotypic/character_table.hpp"
#include "isotypic/subgroups.hpp"

namespace isotypic {

/// What is known about the Schur index m over Q of an orbit.
struct SchurStatus {
  enum class Kind { exact, asserted, bounded };
  Kind kind = Kind::bounded;
  long m = 1;              ///< value used downstream; 1 (conditional) when bounded
  long divisor_bound = 0;  ///< g = gcd over subgroups of dim V^H; m divides g
  std::string evidence;

  bool conditional() const { return kind == Kind::bounded; }
  std::string describe() const;
};

/// A Galois orbit of complex irreducibles: one rational irreducible W with
/// complexification m * (sum over the orbit).
struct RationalIrrep {
  std::vector<std::size_t> orbit;  ///< character indices, ascending
  std::vector<long> stabilizer;    ///< character field K as a subgroup of (Z/e)^x
  long degree = 0;                 ///< n = dim V
  SchurStatus schur;

  std::size_t field_degree() const { return orbit.size(); }
  /// dim_Q W = m * n * [K:Q].
  long rational_dimension() const { return schur.m * degree * static_cast<long>(orbit.size()); }
  /// "V2", "V5+V6", "2(V13+V14)" with 1-based character numbers.
  std::string label() const;
};

std::vector<RationalIrrep> galois_orbits(const CharacterTable& table);

/// m * Tr_{K/Q}(chi_V) per class; with a bounded status the factor m = 1 is
/// used and the result is the unscaled trace character.
std::vector<Rational> rational_character(const CharacterTable& table, const RationalIrrep& w);

/// gcd over all subgroup classes of dim V^H for V in the orbit.
long schur_divisor_bound(const CharacterTable& table, const RationalIrrep& w, const SubgroupLattice& lattice);

/// Picks an orbit by degree / field degree / member character (1-based).
struct IrrepSelector {
  std::optional<long> degree;
  std::optional<long> field_degree;
  std::vector<std::size_t> members;  ///< 1-based character numbers that must all lie in the orbit

  bool matches(const RationalIrrep& w) const;
  std::string describe() const;
};

/// Parses "13", "13-14" (character numbers) or "deg4:K2" style selectors.
IrrepSelector parse_irrep_selector(const std::string& text);

}  // namespace isotypic
