#include "isotypic/analysis.hpp"

#include <numeric>

#include "isotypic/errors.hpp"

namespace isotypic {

GroupAnalysis::GroupAnalysis(GroupPtr group, std::optional<CharacterTable> table, AnalysisOptions options)
    : group_(group),
      options_(std::move(options)),
      lattice_(group, options_.bounds),
      table_(table ? std::move(*table) : compute_character_table(group)),
      irreps_(galois_orbits(table_)) {
  if (table_.group_ptr() != group_) throw ValidationError("character table belongs to a different group");
  irrep_of_char_.assign(table_.size(), 0);
  for (std::size_t j = 0; j < irreps_.size(); ++j) {
    for (auto chi : irreps_[j].orbit) irrep_of_char_[chi] = j;
  }
  fixed_.assign(lattice_.size(), std::vector<long>(table_.size(), 0));
  for (std::size_t s = 0; s < lattice_.size(); ++s) {
    for (std::size_t chi = 0; chi < table_.size(); ++chi) fixed_[s][chi] = fixed_dim(table_, chi, lattice_[s]);
  }

  for (auto& w : irreps_) {
    long g = 0;
    for (std::size_t s = 0; s < lattice_.size(); ++s) g = std::gcd(g, fixed_[s][w.orbit.front()]);
    w.schur.divisor_bound = g;
    if (g == 1) {
      w.schur.kind = SchurStatus::Kind::exact;
      w.schur.m = 1;
      w.schur.evidence = "divisor bound g = 1";
    } else {
      w.schur.kind = SchurStatus::Kind::bounded;
      w.schur.m = 1;
      w.schur.evidence = "m divides " + std::to_string(g) + "; m = 1 assumed";
    }
  }
  for (const auto& decl : options_.schur) {
    std::size_t j = find_irrep(decl.selector);
    auto& w = irreps_[j];
    if (decl.m <= 0 || w.schur.divisor_bound % decl.m != 0 || w.degree % decl.m != 0) {
      throw InvariantError("Schur index " + std::to_string(decl.m) + " for " + w.label() +
                           " is inconsistent with subgroup multiplicities (g = " + std::to_string(w.schur.divisor_bound) +
                           ", n = " + std::to_string(w.degree) + ")");
    }
    if (w.schur.kind == SchurStatus::Kind::exact && w.schur.m != decl.m) {
      throw InvariantError("Schur index of " + w.label() + " is certified to be " + std::to_string(w.schur.m));
    }
    if (w.schur.kind == SchurStatus::Kind::exact) continue;
    w.schur.m = decl.m;
    if (decl.asserted) {
      w.schur.kind = SchurStatus::Kind::asserted;
      w.schur.evidence = "asserted; divides g = " + std::to_string(w.schur.divisor_bound) +
                         (decl.source.empty() ? "" : "; " + decl.source);
    } else {
      w.schur.kind = SchurStatus::Kind::exact;
      w.schur.evidence = decl.source.empty() ? "declared" : decl.source;
    }
  }

  rho_.assign(lattice_.size(), std::vector<long>(irreps_.size(), 0));
  for (std::size_t s = 0; s < lattice_.size(); ++s) {
    for (std::size_t j = 0; j < irreps_.size(); ++j) {
      long d = fixed_[s][irreps_[j].orbit.front()];
      if (d % irreps_[j].schur.m != 0) {
        throw InvariantError("Schur index inconsistent with subgroup multiplicities for " + irreps_[j].label());
      }
      rho_[s][j] = d / irreps_[j].schur.m;
    }
  }
}

std::size_t GroupAnalysis::find_irrep(const IrrepSelector& sel) const {
  std::optional<std::size_t> hit;
  for (std::size_t j = 0; j < irreps_.size(); ++j) {
    if (!sel.matches(irreps_[j])) continue;
    if (hit) throw ValidationError("irreducible selector '" + sel.describe() + "' is ambiguous");
    hit = j;
  }
  if (!hit) throw ValidationError("no rational irreducible matches '" + sel.describe() + "'");
  return *hit;
}

std::size_t GroupAnalysis::subgroup_class(const std::vector<std::string>& generator_words) const {
  std::vector<Element> gens;
  for (const auto& w : generator_words) {
    if (w == "G") {
      gens.insert(gens.end(), group_->generators().begin(), group_->generators().end());
    } else {
      gens.push_back(group_->parse_element(w));
    }
  }
  return lattice_.class_of(subgroup_generated(*group_, gens));
}

bool GroupAnalysis::any_conditional() const {
  for (const auto& w : irreps_) {
    if (w.schur.conditional()) return true;
  }
  return false;
}

}  // namespace isotypic
