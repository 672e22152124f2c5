#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotypic/character_table.hpp"
#include "isotypic/rational_irreps.hpp"
#include "isotypic/subgroups.hpp"

namespace isotypic {

/// A Schur index supplied from outside the computation: declared with a
/// source (bundled fixtures) or asserted by the user.
struct SchurDeclaration {
  IrrepSelector selector;
  long m = 1;
  std::string source;
  bool asserted = false;
};

struct AnalysisOptions {
  Bounds bounds;
  std::vector<SchurDeclaration> schur;
};

/// Everything downstream needs about one group: lattice, table, rational
/// irreducibles with resolved Schur statuses and all dim V^H. Immutable.
class GroupAnalysis {
 public:
  GroupAnalysis(GroupPtr group, std::optional<CharacterTable> table = std::nullopt, AnalysisOptions options = {});

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  const CharacterTable& table() const { return table_; }
  const std::vector<RationalIrrep>& irreps() const { return irreps_; }
  const AnalysisOptions& options() const { return options_; }

  /// dim V^H for subgroup class s and character chi.
  long fixed(std::size_t s, std::size_t chi) const { return fixed_[s][chi]; }
  /// Multiplicities a_j = dim V_j^H / m_j of rho_H, one per rational irreducible.
  const std::vector<long>& rho(std::size_t s) const { return rho_[s]; }
  std::size_t irrep_of_character(std::size_t chi) const { return irrep_of_char_[chi]; }
  /// Index of the unique orbit matching the selector.
  std::size_t find_irrep(const IrrepSelector& sel) const;
  /// Subgroup class of the subgroup generated by the given words ("1", "G" accepted).
  std::size_t subgroup_class(const std::vector<std::string>& generator_words) const;
  bool any_conditional() const;

 private:
  GroupPtr group_;
  AnalysisOptions options_;
  SubgroupLattice lattice_;
  CharacterTable table_;
  std::vector<RationalIrrep> irreps_;
  std::vector<std::size_t> irrep_of_char_;
  std::vector<std::vector<long>> fixed_;
  std::vector<std::vector<long>> rho_;
};

}  // namespace isotypic
