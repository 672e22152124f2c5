#include "isotypic/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "isotypic/errors.hpp"

namespace isotypic {

std::vector<long> DecompositionReport::exponents() const {
  std::vector<long> out;
  for (const auto& f : factors) out.push_back(f.exponent);
  return out;
}

bool DecompositionReport::conditional() const {
  for (const auto& f : factors) {
    if (f.conditional && f.exponent != 0) return true;
  }
  return false;
}

std::size_t trivial_irrep(const GroupAnalysis& a) {
  const auto& top = a.rho(a.lattice().size() - 1);
  for (std::size_t j = 0; j < top.size(); ++j) {
    if (top[j] == 1) return j;
  }
  throw InvariantError("no trivial irreducible found");
}

namespace {

DecompositionReport make_report(const GroupAnalysis& a, DecompositionReport::Subject subject,
                                const std::vector<long>& exps) {
  DecompositionReport r;
  r.subject = subject;
  for (std::size_t j = 0; j < exps.size(); ++j) {
    const auto& w = a.irreps()[j];
    r.factors.push_back({j, exps[j], w.schur.describe(), w.schur.conditional()});
  }
  return r;
}

std::size_t weight(const GroupAnalysis& a, const std::vector<long>& v) {
  long total = 0;
  for (std::size_t j = 0; j < v.size(); ++j) total += v[j] * a.irreps()[j].rational_dimension();
  return static_cast<std::size_t>(total);
}

}  // namespace

DecompositionReport decompose_jacobian(const GroupAnalysis& a) {
  std::vector<long> exps;
  for (const auto& w : a.irreps()) {
    if (w.degree % w.schur.m != 0) throw InvariantError("Schur index inconsistent with subgroup multiplicities");
    exps.push_back(w.degree / w.schur.m);
  }
  return make_report(a, DecompositionReport::Subject::jacobian, exps);
}

DecompositionReport decompose_intermediate(const GroupAnalysis& a, std::size_t h) {
  if (h >= a.lattice().size()) throw ValidationError("subgroup class out of range");
  auto r = make_report(a, DecompositionReport::Subject::intermediate, a.rho(h));
  r.h = h;
  return r;
}

std::vector<long> rho_difference(const GroupAnalysis& a, std::size_t h, std::size_t n) {
  std::vector<long> d = a.rho(h);
  const auto& rn = a.rho(n);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] -= rn[j];
  return d;
}

DecompositionReport decompose_prym(const GroupAnalysis& a, std::size_t h, std::size_t n) {
  const auto& lat = a.lattice();
  if (h >= lat.size() || n >= lat.size()) throw ValidationError("subgroup class out of range");
  auto c = lat.contained_up_to_conjugacy(h, n);
  if (!c) throw ValidationError("subgroup H is not contained in N up to conjugacy");
  auto d = rho_difference(a, h, n);
  for (long s : d) {
    if (s < 0) throw InvariantError("negative Prym exponent");
  }
  auto r = make_report(a, DecompositionReport::Subject::prym, d);
  r.h = h;
  r.n = n;
  r.conjugator = *c;
  return r;
}

std::vector<PrymPair> find_prym_realizations(const GroupAnalysis& a, std::size_t w) {
  const auto& lat = a.lattice();
  std::vector<PrymPair> out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    for (std::size_t n = 0; n < lat.size(); ++n) {
      auto c = lat.contained_up_to_conjugacy(h, n);
      if (!c) continue;
      auto d = rho_difference(a, h, n);
      bool ok = true;
      for (std::size_t j = 0; j < d.size() && ok; ++j) ok = d[j] == (j == w ? 1 : 0);
      if (ok) out.push_back({h, n, *c});
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const PrymPair& x, const PrymPair& y) {
    if (lat[x.n].order() != lat[y.n].order()) return lat[x.n].order() > lat[y.n].order();
    return lat[x.h].order() > lat[y.h].order();
  });
  return out;
}

std::vector<IntersectionRealization> find_intersection_realizations(const GroupAnalysis& a, std::size_t w,
                                                                    std::size_t max_arity) {
  const auto& lat = a.lattice();
  const std::size_t r = a.irreps().size();
  std::vector<IntersectionRealization> out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    std::vector<std::size_t> cands;
    std::vector<std::vector<long>> diffs;
    for (std::size_t n = 0; n < lat.size(); ++n) {
      if (n == h || !lat.contained_up_to_conjugacy(h, n)) continue;
      auto d = rho_difference(a, h, n);
      if (d[w] != 1) continue;
      cands.push_back(n);
      diffs.push_back(std::move(d));
    }
    // common[j] = min over chosen of diffs[.][j], excluding w
    auto shares_only_w = [&](const std::vector<std::size_t>& pick) {
      for (std::size_t j = 0; j < r; ++j) {
        if (j == w) continue;
        bool all = true;
        for (auto p : pick) all = all && diffs[p][j] > 0;
        if (all) return false;
      }
      return true;
    };
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
      if (pick.size() == k) {
        if (!shares_only_w(pick)) return;
        for (const auto& f : found) {
          if (std::includes(pick.begin(), pick.end(), f.begin(), f.end())) return;
        }
        found.push_back(pick);
        return;
      }
      for (std::size_t i = start; i < cands.size(); ++i) {
        pick.push_back(i);
        rec(i + 1, k);
        pick.pop_back();
      }
    };
    for (std::size_t k = 2; k <= max_arity && k <= cands.size(); ++k) rec(0, k);
    for (const auto& f : found) {
      IntersectionRealization ir;
      ir.h = h;
      for (auto p : f) {
        ir.ns.push_back(cands[p]);
        auto res = diffs[p];
        res[w] = 0;
        ir.residues.push_back(std::move(res));
      }
      out.push_back(std::move(ir));
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const IntersectionRealization& x, const IntersectionRealization& y) {
    if (x.ns.size() != y.ns.size()) return x.ns.size() < y.ns.size();
    if (lat[x.h].order() != lat[y.h].order()) return lat[x.h].order() > lat[y.h].order();
    std::size_t sx = 0, sy = 0;
    for (auto n : x.ns) sx += lat[n].order();
    for (auto n : y.ns) sy += lat[n].order();
    return sx > sy;
  });
  return out;
}

std::vector<Containment> find_containments(const GroupAnalysis& a, std::size_t w) {
  const auto& lat = a.lattice();
  std::vector<Containment> out;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    if (a.rho(h)[w] == 0) continue;
    for (std::size_t n = 0; n < lat.size(); ++n) {
      if (a.rho(n)[w] != 0 || !lat.contained_up_to_conjugacy(h, n)) continue;
      out.push_back({h, n, a.rho(h)[w]});
    }
  }
  return out;
}

std::vector<PrymCoincidence> find_prym_isogenies(const GroupAnalysis& a) {
  const auto& lat = a.lattice();
  std::map<std::vector<long>, std::vector<std::pair<std::size_t, std::size_t>>> by_diff;
  for (std::size_t s = 0; s < lat.size(); ++s) {
    for (std::size_t r = 0; r < lat.size(); ++r) {
      if (s == r || !lat.contained_up_to_conjugacy(s, r)) continue;
      auto d = rho_difference(a, s, r);
      if (std::all_of(d.begin(), d.end(), [](long v) { return v == 0; })) continue;
      by_diff[d].emplace_back(s, r);
    }
  }
  std::vector<PrymCoincidence> out;
  for (const auto& [d, pairs] : by_diff) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        out.push_back({pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PrymCoincidence& x, const PrymCoincidence& y) {
    return std::tie(x.s, x.r, x.x, x.y) < std::tie(y.s, y.r, y.x, y.y);
  });
  return out;
}

Verdict classify_factor(const GroupAnalysis& a, std::size_t w, std::size_t max_arity) {
  Verdict v;
  v.irrep = w;
  v.all_pairs = find_prym_realizations(a, w);
  if (!v.all_pairs.empty()) {
    v.kind = Verdict::Kind::prym_pair;
    v.prym = v.all_pairs.front();
    return v;
  }
  v.all_intersections = find_intersection_realizations(a, w, max_arity);
  if (!v.all_intersections.empty()) {
    v.kind = Verdict::Kind::intersection;
    v.intersection = v.all_intersections.front();
    return v;
  }
  auto conts = find_containments(a, w);
  const auto& lat = a.lattice();
  std::optional<ComplementWitness> best;
  std::size_t best_weight = 0;
  for (const auto& c : conts) {
    auto d = rho_difference(a, c.h, c.n);
    std::size_t wt = weight(a, d);
    bool better = !best || wt < best_weight ||
                  (wt == best_weight && lat[c.h].order() > lat[best->h].order());
    if (better) {
      best = ComplementWitness{c.h, c.n, d};
      best_weight = wt;
    }
  }
  if (best) {
    v.kind = Verdict::Kind::complement;
    v.complement = best;
  }
  return v;
}

FullReport full_report(const GroupAnalysis& a, std::size_t max_arity) {
  FullReport r;
  r.jacobian = decompose_jacobian(a);
  const std::size_t triv = trivial_irrep(a);
  for (const auto& f : r.jacobian.factors) {
    if (f.exponent == 0 || f.irrep == triv) continue;
    r.verdicts.push_back(classify_factor(a, f.irrep, max_arity));
  }
  return r;
}

}  // namespace isotypic
