#include "isotypic/idempotents.hpp"

#include <sstream>

#include "isotypic/errors.hpp"
#include "isotypic/linalg.hpp"

namespace isotypic {

CycElement central_idempotent_eV(const CharacterTable& table, std::size_t chi) {
  const FiniteGroup& g = table.group();
  CycElement e(table.group_ptr(), CycValue(table.level()));
  const Rational scale = ratio(table.degree(chi), static_cast<long>(g.order()));
  for (Element x = 0; x < g.order(); ++x) e[x] = table.at(chi, g.inv(x)) * scale;
  return e;
}

QElement central_idempotent_eW(const CharacterTable& table, const RationalIrrep& w) {
  const FiniteGroup& g = table.group();
  QElement e(table.group_ptr(), Rational(0));
  const Rational scale = ratio(w.degree, static_cast<long>(g.order()));
  const std::size_t chi = w.orbit.front();
  for (Element x = 0; x < g.order(); ++x) e[x] = trace_to_rational(table.at(chi, g.inv(x)), w.stabilizer) * scale;
  return e;
}

QElement projector_pH(const GroupPtr& group, const Subgroup& h) {
  QElement p(group, Rational(0));
  const Rational c = ratio(1, static_cast<long>(h.order()));
  for (auto x : h.members) p[x] = c;
  return p;
}

QElement subgroup_idempotent_fH(const GroupPtr& group, const Subgroup& h, const QElement& e_w) {
  return projector_pH(group, h) * e_w;
}

LElement embed_rational(const QElement& a, const NumFieldPtr& field) {
  return a.map(NumFieldValue(field), [&](const Rational& q) { return NumFieldValue(field, q); });
}

LElement embed_values(const CycElement& a, const ValueEmbedding& embedding) {
  return a.map(NumFieldValue(embedding.field()), [&](const CycValue& v) { return embedding.map_or_throw(v); });
}

LElement apply_automorphism(const LElement& a, std::size_t sigma) {
  return a.map(a.zero(), [sigma](const NumFieldValue& v) { return v.apply(sigma); });
}

std::optional<QElement> to_rational(const LElement& a) {
  QElement q(a.group_ptr(), Rational(0));
  for (Element x = 0; x < a.group().order(); ++x) {
    if (!a[x].is_rational()) return std::nullopt;
    q[x] = a[x].rational_part();
  }
  return q;
}

bool fixed_by(const LElement& a, const std::vector<std::size_t>& automorphisms) {
  for (auto s : automorphisms) {
    if (!(apply_automorphism(a, s) == a)) return false;
  }
  return true;
}

LElement ell_from_representation(const MatrixRep& rep, std::size_t j) {
  if (j >= rep.degree()) throw ValidationError("diagonal index out of range");
  const FiniteGroup& g = rep.group();
  LElement ell(rep.group_ptr(), NumFieldValue(rep.field()));
  const Rational scale = ratio(static_cast<long>(rep.degree()), static_cast<long>(g.order()));
  for (Element x = 0; x < g.order(); ++x) ell[x] = rep.image(g.inv(x))[j][j] * scale;
  return ell;
}

namespace {

void add_ideal(EchelonBasis<NumFieldValue>& basis, const LElement& a) {
  for (Element x = 0; x < a.group().order(); ++x) basis.insert(a.left_translate(x).coeffs());
}

}  // namespace

OrbitModuleCheck orbit_module_check(const LElement& ell, std::size_t n) {
  const auto& field = ell[0].field();
  const auto& fixers = field->subfield_fixers();
  const std::size_t order = ell.group().order();
  OrbitModuleCheck out;
  out.expected = fixers.size() * n;

  EchelonBasis<NumFieldValue> own(order);
  add_ideal(own, ell);
  out.stabilizer_trivial = true;
  EchelonBasis<NumFieldValue> total(order);
  std::size_t dims = 0;
  for (auto h : fixers) {
    LElement image = apply_automorphism(ell, h);
    if (h != field->identity_automorphism() && own.contains(image.coeffs())) out.stabilizer_trivial = false;
    dims += ideal_dim(image);
    add_ideal(total, image);
  }
  out.dim = total.rank();
  out.direct = out.dim == dims;
  return out;
}

ModuleRelation compare_orbit_modules(const LElement& ell_j, const LElement& ell_k) {
  const auto& fixers = ell_j[0].field()->subfield_fixers();
  const std::size_t order = ell_j.group().order();
  EchelonBasis<NumFieldValue> mj(order), mk(order), both(order);
  for (auto h : fixers) {
    LElement a = apply_automorphism(ell_j, h), b = apply_automorphism(ell_k, h);
    add_ideal(mj, a);
    add_ideal(mk, b);
    add_ideal(both, a);
    add_ideal(both, b);
  }
  if (both.rank() == mj.rank() && both.rank() == mk.rank()) return ModuleRelation::equal;
  if (both.rank() == mj.rank() + mk.rank()) return ModuleRelation::trivial_intersection;
  return ModuleRelation::other;
}

bool Transcript::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string Transcript::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

IdempotentSystem construct_primitive_system(const MatrixRep& rep, const LElement& e_v, const QElement& e_w) {
  const FiniteGroup& g = rep.group();
  const auto& field = rep.field();
  const auto& fixers = field->subfield_fixers();
  IdempotentSystem sys{field, rep.degree(), fixers.size(), e_v, e_w, {}, {}, {}, {}, {}};
  const std::size_t n = sys.n, m = sys.m;
  if (m == 0 || n % m != 0) throw InvariantError("field degree inconsistent with Schur index");

  for (std::size_t j = 0; j < n; ++j) sys.ells.push_back(ell_from_representation(rep, j));

  EchelonBasis<NumFieldValue> span(g.order());
  for (std::size_t j = 0; j < n; ++j) {
    if (span.contains(sys.ells[j].coeffs())) continue;
    sys.selected.push_back(j);
    for (auto h : fixers) add_ideal(span, apply_automorphism(sys.ells[j], h));
  }
  if (sys.selected.size() != n / m) throw InvariantError("field degree inconsistent with Schur index");

  // B_s^1: first n independent left translates of ell_{j_s}; B_s^h = tau_h(B_s^1).
  std::vector<std::vector<std::vector<LElement>>> blocks;  // [s][h] -> basis elements
  std::vector<std::vector<NumFieldValue>> all;
  for (auto j : sys.selected) {
    EchelonBasis<NumFieldValue> local(g.order());
    std::vector<LElement> b1;
    for (Element x = 0; x < g.order() && b1.size() < n; ++x) {
      LElement v = sys.ells[j].left_translate(x);
      if (local.insert(v.coeffs())) b1.push_back(std::move(v));
    }
    if (b1.size() != n) throw InvariantError("basis assembly failed");
    std::vector<std::vector<LElement>> per_h;
    for (auto h : fixers) {
      std::vector<LElement> bh;
      for (const auto& v : b1) {
        bh.push_back(apply_automorphism(v, h));
        all.push_back(bh.back().coeffs());
      }
      per_h.push_back(std::move(bh));
    }
    blocks.push_back(std::move(per_h));
  }
  EchelonBasis<NumFieldValue> check(g.order());
  for (const auto& v : all) {
    if (!check.insert(v)) throw InvariantError("basis assembly failed");
  }
  auto coords = solve_combination(all, e_v.coeffs());
  if (!coords) throw InvariantError("basis assembly failed");

  std::size_t idx = 0;
  for (const auto& per_h : blocks) {
    std::vector<LElement> row;
    for (const auto& bh : per_h) {
      LElement u(rep.group_ptr(), NumFieldValue(field));
      for (const auto& v : bh) {
        const NumFieldValue& c = (*coords)[idx++];
        if (!c.is_zero()) u += LElement(v).scale(c);
      }
      row.push_back(std::move(u));
    }
    sys.u.push_back(std::move(row));
  }
  return sys;
}

std::vector<LElement> symmetrize_k(const IdempotentSystem& system) {
  std::vector<LElement> out;
  for (const auto& row : system.u) {
    LElement k(row[0].group_ptr(), NumFieldValue(system.field));
    for (auto h : system.field->subfield_fixers()) k += apply_automorphism(row[0], h);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<QElement> symmetrize_f(const IdempotentSystem& system) {
  std::vector<QElement> out;
  for (const auto& row : system.u) {
    LElement f(row[0].group_ptr(), NumFieldValue(system.field));
    for (std::size_t s = 0; s < system.field->automorphism_count(); ++s) f += apply_automorphism(row[0], s);
    auto q = to_rational(f);
    if (!q) throw InvariantError("symmetrized idempotent is not rational");
    out.push_back(std::move(*q));
  }
  return out;
}

IdempotentSystem build_idempotent_system(const MatrixRep& rep, const LElement& e_v, const QElement& e_w) {
  IdempotentSystem sys = construct_primitive_system(rep, e_v, e_w);
  sys.k = symmetrize_k(sys);
  sys.f = symmetrize_f(sys);
  return sys;
}

Transcript verify_system(const IdempotentSystem& sys) {
  Transcript t;
  const auto& field = sys.field;
  const auto& fixers = field->subfield_fixers();
  const auto cosets = field->coset_representatives();
  const std::size_t n = sys.n, m = sys.m, kq = cosets.size();
  const GroupPtr& group = sys.e_v.group_ptr();
  LElement zero(group, NumFieldValue(field));

  // ell_j
  LElement ell_sum = zero;
  bool ell_idem = true, ell_orth = true, ell_prim = true;
  for (std::size_t j = 0; j < sys.ells.size(); ++j) {
    ell_sum += sys.ells[j];
    ell_idem = ell_idem && is_idempotent(sys.ells[j]);
    ell_prim = ell_prim && ideal_dim(sys.ells[j]) == n;
    for (std::size_t i = 0; i < j; ++i) ell_orth = ell_orth && are_orthogonal(sys.ells[i], sys.ells[j]);
  }
  t.add("ell_j idempotent", ell_idem);
  t.add("ell_j pairwise orthogonal", ell_orth);
  t.add("sum of ell_j equals e_V", ell_sum == sys.e_v);
  t.add("ell_j primitive (ideal dim n over L)", ell_prim, "n = " + std::to_string(n));
  for (std::size_t s = 0; s < sys.selected.size(); ++s) {
    auto check = orbit_module_check(sys.ells[sys.selected[s]], n);
    t.add("orbit module of ell_" + std::to_string(sys.selected[s] + 1) + ": trivial stabilizer, direct sum, dim m*n",
          check.ok(), "dim " + std::to_string(check.dim) + ", expected " + std::to_string(check.expected));
  }
  t.add("number of blocks equals n/m", sys.u.size() == n / m,
        std::to_string(sys.u.size()) + " blocks, n/m = " + std::to_string(n / m));

  // u_s^h
  bool galois_ok = true, table_ok = true, prim_ok = true;
  LElement u_sum = zero;
  for (std::size_t s = 0; s < sys.u.size(); ++s) {
    for (std::size_t h = 0; h < sys.u[s].size(); ++h) {
      const LElement& u = sys.u[s][h];
      u_sum += u;
      galois_ok = galois_ok && apply_automorphism(sys.u[s][0], fixers[h]) == u;
      prim_ok = prim_ok && ideal_dim(u) == n;
      for (std::size_t s2 = 0; s2 < sys.u.size(); ++s2) {
        for (std::size_t h2 = 0; h2 < sys.u[s2].size(); ++h2) {
          LElement prod = u * sys.u[s2][h2];
          bool diag = s == s2 && h == h2;
          table_ok = table_ok && (diag ? prod == u : prod.is_zero());
        }
      }
    }
  }
  t.add("u_s^h = tau_h(u_s^1)", galois_ok);
  t.add("u_s^h u_t^l = delta u_s^h", table_ok);
  t.add("sum of u_s^h equals e_V", u_sum == sys.e_v);
  t.add("u_s^h primitive (ideal dim n over L)", prim_ok);

  // k_s
  bool k_in_K = true, k_table = true, k_prim = true, phi_table = true;
  LElement k_sum = zero;
  for (std::size_t s = 0; s < sys.k.size(); ++s) {
    k_sum += sys.k[s];
    k_in_K = k_in_K && fixed_by(sys.k[s], fixers);
    k_prim = k_prim && ideal_dim(sys.k[s]) == m * n;
    for (std::size_t s2 = 0; s2 < sys.k.size(); ++s2) {
      LElement prod = sys.k[s] * sys.k[s2];
      k_table = k_table && (s == s2 ? prod == sys.k[s] : prod.is_zero());
    }
  }
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t s = 0; s < sys.k.size(); ++s) {
      LElement a = apply_automorphism(sys.k[s], cosets[i]);
      for (std::size_t j = 0; j < cosets.size(); ++j) {
        for (std::size_t s2 = 0; s2 < sys.k.size(); ++s2) {
          LElement prod = a * apply_automorphism(sys.k[s2], cosets[j]);
          phi_table = phi_table && (i == j && s == s2 ? prod == a : prod.is_zero());
        }
      }
    }
  }
  t.add("k_s in K[G] (fixed by Gal(L/K))", k_in_K);
  t.add("k_s orthogonal idempotents", k_table);
  t.add("sum of k_s equals e_V", k_sum == sys.e_v);
  t.add("k_s primitive (ideal dim m*n over L)", k_prim, "m*n = " + std::to_string(m * n));
  t.add("phi_i(k_s) phi_j(k_t) = delta phi_i(k_s)", phi_table);

  // f_s
  bool f_table = true, f_prim = true, f_from_k = true;
  QElement f_sum(group, Rational(0));
  for (std::size_t s = 0; s < sys.f.size(); ++s) {
    f_sum += sys.f[s];
    f_prim = f_prim && ideal_dim(sys.f[s]) == m * n * kq;
    LElement via_k = zero;
    for (auto c : cosets) via_k += apply_automorphism(sys.k[s], c);
    f_from_k = f_from_k && via_k == embed_rational(sys.f[s], field);
    for (std::size_t s2 = 0; s2 < sys.f.size(); ++s2) {
      QElement prod = sys.f[s] * sys.f[s2];
      f_table = f_table && (s == s2 ? prod == sys.f[s] : prod.is_zero());
    }
  }
  t.add("f_s rational", sys.f.size() == sys.u.size());
  t.add("f_s = sum over Gal(K/Q) of phi(k_s)", f_from_k);
  t.add("f_s orthogonal idempotents", f_table);
  t.add("sum of f_s equals e_W", f_sum == sys.e_w);
  t.add("f_s primitive (ideal dim m*n*[K:Q] over Q)", f_prim, "m*n*[K:Q] = " + std::to_string(m * n * kq));
  return t;
}

}  // namespace isotypic
