#pragma once

#include <string>
#include <vector>

#include "isotypic/algebra.hpp"
#include "isotypic/character_table.hpp"
#include "isotypic/matrix_rep.hpp"
#include "isotypic/rational_irreps.hpp"
#include "isotypic/subgroups.hpp"

namespace isotypic {

using QElement = AlgebraElement<Rational>;
using CycElement = AlgebraElement<CycValue>;
using LElement = AlgebraElement<NumFieldValue>;

/// e_V = (n/|G|) sum chi(g^-1) g, coefficients in Q(zeta_e).
CycElement central_idempotent_eV(const CharacterTable& table, std::size_t chi);
/// e_W = (n/|G|) sum Tr_{K/Q}(chi(g^-1)) g.
QElement central_idempotent_eW(const CharacterTable& table, const RationalIrrep& w);
/// p_H = (1/|H|) sum_{h in H} h.
QElement projector_pH(const GroupPtr& group, const Subgroup& h);
/// f_H = p_H e_W.
QElement subgroup_idempotent_fH(const GroupPtr& group, const Subgroup& h, const QElement& e_w);

LElement embed_rational(const QElement& a, const NumFieldPtr& field);
LElement embed_values(const CycElement& a, const ValueEmbedding& embedding);
LElement apply_automorphism(const LElement& a, std::size_t sigma);
/// Coefficientwise rational form, if every coefficient is rational.
std::optional<QElement> to_rational(const LElement& a);
bool fixed_by(const LElement& a, const std::vector<std::size_t>& automorphisms);

/// ell_j = (n/|G|) sum r_jj(g^-1) g for the j-th diagonal entry (0-based).
LElement ell_from_representation(const MatrixRep& rep, std::size_t j);

struct OrbitModuleCheck {
  bool stabilizer_trivial = false;
  bool direct = false;
  std::size_t dim = 0;
  std::size_t expected = 0;  ///< [L:K] * n
  bool ok() const { return stabilizer_trivial && direct && dim == expected; }
};

/// Analyses M = sum over Gal(L/K) of L[G] tau(ell) (Gal(L/K) from ell's field).
OrbitModuleCheck orbit_module_check(const LElement& ell, std::size_t n);

enum class ModuleRelation { equal, trivial_intersection, other };
/// Relation between M_j and M_k as defined above.
ModuleRelation compare_orbit_modules(const LElement& ell_j, const LElement& ell_k);

/// One named pass/fail line of a verification transcript.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Transcript {
  std::vector<Check> checks;
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const;
  std::string render() const;
};

/// Output of the u_s^h construction and its Galois symmetrizations.
struct IdempotentSystem {
  NumFieldPtr field;
  std::size_t n = 0;
  std::size_t m = 0;  ///< [L:K]
  LElement e_v;
  QElement e_w;
  std::vector<LElement> ells;
  std::vector<std::size_t> selected;     ///< j_s, 0-based
  std::vector<std::vector<LElement>> u;  ///< u[s][h], h indexes Gal(L/K) as listed by the field
  std::vector<LElement> k;
  std::vector<QElement> f;
};

/// Greedy selection of ell's with independent orbit modules, basis assembly
/// and coordinates of e_V; fills ells, selected and u.
IdempotentSystem construct_primitive_system(const MatrixRep& rep, const LElement& e_v, const QElement& e_w);
/// k_s = sum over Gal(L/K) of tau(u_s^1).
std::vector<LElement> symmetrize_k(const IdempotentSystem& system);
/// f_s = sum over Gal(L/Q) of sigma(u_s^1), returned with rational coefficients.
std::vector<QElement> symmetrize_f(const IdempotentSystem& system);
/// construct_primitive_system followed by both symmetrizations.
IdempotentSystem build_idempotent_system(const MatrixRep& rep, const LElement& e_v, const QElement& e_w);

/// Every invariant of the construction, checked exactly.
Transcript verify_system(const IdempotentSystem& system);

}  // namespace isotypic
