#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotypic/analysis.hpp"

namespace isotypic {

/// One factor B_j^{exponent} of an isotypical decomposition.
struct Factor {
  std::size_t irrep = 0;
  long exponent = 0;
  std::string provenance;  ///< Schur status of the irrep
  bool conditional = false;
};

struct DecompositionReport {
  enum class Subject { jacobian, intermediate, prym };
  Subject subject = Subject::jacobian;
  std::size_t h = 0;  ///< subgroup class (intermediate, prym)
  std::size_t n = 0;  ///< subgroup class (prym)
  Element conjugator = 0;  ///< c with c H c^-1 inside N (prym)
  std::vector<Factor> factors;  ///< one per rational irreducible, in irrep order

  std::vector<long> exponents() const;
  bool conditional() const;
};

/// Index of the trivial rational irreducible.
std::size_t trivial_irrep(const GroupAnalysis& a);

/// n_j = dim V_j / m_j.
DecompositionReport decompose_jacobian(const GroupAnalysis& a);
/// dim V_j^H / m_j.
DecompositionReport decompose_intermediate(const GroupAnalysis& a, std::size_t h);
/// s_j = (dim V_j^H - dim V_j^N) / m_j; H must lie in N up to conjugacy.
DecompositionReport decompose_prym(const GroupAnalysis& a, std::size_t h, std::size_t n);

/// rho_H - rho_N as a vector over the rational irreducibles.
std::vector<long> rho_difference(const GroupAnalysis& a, std::size_t h, std::size_t n);

struct PrymPair {
  std::size_t h = 0, n = 0;
  Element conjugator = 0;
};

struct IntersectionRealization {
  std::size_t h = 0;
  std::vector<std::size_t> ns;           ///< ascending subgroup classes
  std::vector<std::vector<long>> residues;  ///< rho_H - rho_N - W per N
};

struct Containment {
  std::size_t h = 0, n = 0;
  long multiplicity = 0;
};

struct ComplementWitness {
  std::size_t h = 0, n = 0;
  std::vector<long> relation;  ///< rho_H - rho_N
};

struct PrymCoincidence {
  std::size_t s = 0, r = 0, x = 0, y = 0;  ///< rho_S - rho_R = rho_X - rho_Y
};

/// Pairs H in N with rho_H = W + rho_N, ordered by (|N| desc, |H| desc).
std::vector<PrymPair> find_prym_realizations(const GroupAnalysis& a, std::size_t w);
/// Minimal tuples (H, N_1..N_k), 2 <= k <= max_arity, with W once in every
/// rho_H - rho_{N_i} and no other irreducible common to all of them.
std::vector<IntersectionRealization> find_intersection_realizations(const GroupAnalysis& a, std::size_t w,
                                                                    std::size_t max_arity = 4);
/// All (H, N) with W in rho_H, H in N and W not in rho_N.
std::vector<Containment> find_containments(const GroupAnalysis& a, std::size_t w);
/// Nontrivial coincidences among Prym differences, each listed once.
std::vector<PrymCoincidence> find_prym_isogenies(const GroupAnalysis& a);

struct Verdict {
  enum class Kind { prym_pair, intersection, complement, unresolved };
  std::size_t irrep = 0;
  Kind kind = Kind::unresolved;
  std::optional<PrymPair> prym;
  std::optional<IntersectionRealization> intersection;
  std::optional<ComplementWitness> complement;
  std::vector<PrymPair> all_pairs;
  std::vector<IntersectionRealization> all_intersections;
};

/// Prym pair if any, else an intersection, else a complement witness.
Verdict classify_factor(const GroupAnalysis& a, std::size_t w, std::size_t max_arity = 4);

struct FullReport {
  DecompositionReport jacobian;
  std::vector<Verdict> verdicts;  ///< one per factor with positive exponent
};

FullReport full_report(const GroupAnalysis& a, std::size_t max_arity = 4);

}  // namespace isotypic
