#include "isotypic/report.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "isotypic/linalg.hpp"

namespace isotypic {

std::string subgroup_id(std::size_t s) { return "S" + std::to_string(s + 1); }

std::string subgroup_generators(const GroupAnalysis& a, std::size_t s) {
  const auto& h = a.lattice()[s];
  if (h.generators.empty()) return "<1>";
  std::string out = "<";
  for (std::size_t i = 0; i < h.generators.size(); ++i) out += (i ? ", " : "") + a.group().label(h.generators[i]);
  return out + ">";
}

json subgroups_json(const GroupAnalysis& a) {
  json out = json::array();
  for (std::size_t s = 0; s < a.lattice().size(); ++s) {
    json gens = json::array();
    for (auto g : a.lattice()[s].generators) gens.push_back(a.group().label(g));
    out.push_back({{"id", subgroup_id(s)},
                   {"order", a.lattice()[s].order()},
                   {"class_length", a.lattice().class_length(s)},
                   {"generators", gens}});
  }
  return out;
}

// ---- scalars -------------------------------------------------------------------

namespace {

struct NamedBasis {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> vectors;
  bool usable = false;
};

const NamedBasis& named_basis(const NumFieldPtr& field) {
  static std::mutex mu;
  static std::map<const NumField*, NamedBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(field.get());
  if (it != cache.end()) return it->second;
  NamedBasis b;
  std::vector<std::pair<std::string, NumFieldValue>> names;
  for (const auto& [n, p] : field->names()) names.emplace_back(n, NumFieldValue(field, p));
  if (!names.empty() && names.size() < 8 && field->degree() > 1) {
    EchelonBasis<Rational> ech(field->degree());
    for (std::size_t mask = 0; mask < (std::size_t{1} << names.size()); ++mask) {
      NumFieldValue prod(field, Rational(1));
      std::string label;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!(mask & (std::size_t{1} << i))) continue;
        prod *= names[i].second;
        label += (label.empty() ? "" : "*") + names[i].first;
      }
      if (ech.insert(prod.coeffs())) {
        b.labels.push_back(label);
        b.vectors.push_back(prod.coeffs());
      }
    }
    b.usable = b.vectors.size() == field->degree();
  }
  return cache.emplace(field.get(), std::move(b)).first->second;
}

}  // namespace

std::string render_named(const NumFieldValue& v) {
  const auto& b = named_basis(v.field());
  if (!b.usable) return v.to_string();
  auto coords = solve_combination(b.vectors, v.coeffs());
  if (!coords) return v.to_string();
  std::string out;
  for (std::size_t i = 0; i < coords->size(); ++i) {
    const Rational& c = (*coords)[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (b.labels[i].empty()) term = to_string(mag);
    else term = (mag == 1 ? "" : to_string(mag) + "*") + b.labels[i];
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string render_element(const LElement& a) {
  return a.to_string([](const NumFieldValue& v) { return render_named(v); });
}

// ---- group and table -------------------------------------------------------------

std::string render_group_info(const GroupAnalysis& a, const std::string& name, Format f) {
  const FiniteGroup& g = a.group();
  if (f == Format::json) {
    json out = group_to_json(g);
    out["name"] = name;
    out["subgroup_classes"] = a.lattice().size();
    out["rational_irreducibles"] = a.irreps().size();
    return out.dump(2) + "\n";
  }
  std::ostringstream o;
  if (!name.empty()) o << name << ": ";
  o << "order " << g.order() << ", " << g.classes().size() << " classes, " << a.lattice().size()
    << " subgroup classes, exponent " << g.exponent() << (g.is_abelian() ? ", abelian" : "") << "\n";
  o << "classes:";
  for (const auto& c : g.classes()) o << " " << g.label(c.representative) << "[" << c.members.size() << "]";
  o << "\n";
  return o.str();
}

std::string render_character_table(const CharacterTable& t, const std::vector<RationalIrrep>& irreps, Format f) {
  if (f == Format::json) {
    json out = character_table_to_json(t);
    json orbits = json::array();
    for (const auto& w : irreps) orbits.push_back(w.label());
    out["rational_irreducibles"] = orbits;
    return out.dump(2) + "\n";
  }
  const FiniteGroup& g = t.group();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& c : g.classes()) header.push_back(g.label(c.representative));
  cells.push_back(header);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"V" + std::to_string(i + 1)};
    for (const auto& v : t.row(i)) row.push_back(v.to_string());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream o;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      o << (c ? " | " : "") << r[c] << std::string(width[c] - r[c].size(), ' ');
    }
    o << "\n";
  }
  o << "rational irreducibles:";
  for (const auto& w : irreps) o << " " << w.label();
  o << "\n";
  return o.str();
}

// ---- decompositions ---------------------------------------------------------------

namespace {

std::string subject_text(const GroupAnalysis& a, const DecompositionReport& r) {
  switch (r.subject) {
    case DecompositionReport::Subject::jacobian:
      return "JW";
    case DecompositionReport::Subject::intermediate:
      return "JW_" + subgroup_id(r.h);
    case DecompositionReport::Subject::prym:
      (void)a;
      return "P(W_" + subgroup_id(r.h) + "/W_" + subgroup_id(r.n) + ")";
  }
  return {};
}

std::string power(const std::string& base, long e) { return e == 1 ? base : base + "^" + std::to_string(e); }

}  // namespace

std::string render_decomposition(const GroupAnalysis& a, const DecompositionReport& r, Format f) {
  const std::size_t triv = trivial_irrep(a);
  if (f == Format::json) {
    json factors = json::array();
    for (const auto& fa : r.factors) {
      if (fa.exponent == 0) continue;
      factors.push_back({{"irrep", a.irreps()[fa.irrep].label()},
                         {"exponent", fa.exponent},
                         {"schur", fa.provenance},
                         {"conditional", fa.conditional}});
    }
    json out{{"subject", subject_text(a, r)}, {"factors", factors}, {"conditional", r.conditional()}};
    if (r.subject != DecompositionReport::Subject::jacobian) {
      out["subgroups"] = subgroups_json(a);
    }
    if (r.subject == DecompositionReport::Subject::prym) out["conjugator"] = a.group().label(r.conjugator);
    return out.dump(2) + "\n";
  }
  std::ostringstream o;
  o << subject_text(a, r) << " ~";
  bool any = false;
  for (const auto& fa : r.factors) {
    if (fa.exponent == 0) continue;
    std::string b = fa.irrep == triv ? "JW_G" : "B[" + a.irreps()[fa.irrep].label() + "]";
    o << (any ? " x " : " ") << power(b, fa.exponent);
    any = true;
  }
  if (!any) o << " 0";
  o << "\n";
  if (r.subject == DecompositionReport::Subject::intermediate) {
    o << "  " << subgroup_id(r.h) << " = " << subgroup_generators(a, r.h) << "\n";
  }
  if (r.subject == DecompositionReport::Subject::prym) {
    o << "  " << subgroup_id(r.h) << " = " << subgroup_generators(a, r.h) << ", " << subgroup_id(r.n) << " = "
      << subgroup_generators(a, r.n) << ", conjugator " << a.group().label(r.conjugator) << "\n";
  }
  for (const auto& fa : r.factors) {
    if (fa.exponent != 0 && fa.conditional) {
      o << "  conditional: " << a.irreps()[fa.irrep].label() << " uses " << fa.provenance << "\n";
    }
  }
  return o.str();
}

namespace {

std::string verdict_kind(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::prym_pair:
      return "PrymPair";
    case Verdict::Kind::intersection:
      return "Intersection";
    case Verdict::Kind::complement:
      return "ComplementWitness";
    case Verdict::Kind::unresolved:
      return "Unresolved";
  }
  return {};
}

std::string prym_text(std::size_t h, std::size_t n) {
  return "P(W_" + subgroup_id(h) + "/W_" + subgroup_id(n) + ")";
}

std::string relation_text(const GroupAnalysis& a, const std::vector<long>& rel) {
  std::string out;
  for (std::size_t j = 0; j < rel.size(); ++j) {
    if (rel[j] == 0) continue;
    out += (out.empty() ? "" : " + ") + (rel[j] == 1 ? std::string() : std::to_string(rel[j]) + "*") +
           a.irreps()[j].label();
  }
  return out.empty() ? "0" : out;
}

std::string witness_text(const GroupAnalysis& a, const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::prym_pair:
      return prym_text(v.prym->h, v.prym->n);
    case Verdict::Kind::intersection: {
      std::string out;
      for (auto n : v.intersection->ns) out += (out.empty() ? "" : " cap ") + prym_text(v.intersection->h, n);
      return out;
    }
    case Verdict::Kind::complement:
      return "complement in " + prym_text(v.complement->h, v.complement->n) + ": rho_" + subgroup_id(v.complement->h) +
             " - rho_" + subgroup_id(v.complement->n) + " = " + relation_text(a, v.complement->relation);
    case Verdict::Kind::unresolved:
      return "none";
  }
  return {};
}

}  // namespace

json verdict_json(const GroupAnalysis& a, const Verdict& v) {
  json out{{"kind", verdict_kind(v.kind)}};
  switch (v.kind) {
    case Verdict::Kind::prym_pair: {
      out["h"] = subgroup_id(v.prym->h);
      out["n"] = subgroup_id(v.prym->n);
      out["conjugator"] = a.group().label(v.prym->conjugator);
      json all = json::array();
      for (const auto& p : v.all_pairs) all.push_back({subgroup_id(p.h), subgroup_id(p.n)});
      out["all"] = all;
      break;
    }
    case Verdict::Kind::intersection: {
      out["h"] = subgroup_id(v.intersection->h);
      json ns = json::array();
      for (auto n : v.intersection->ns) ns.push_back(subgroup_id(n));
      out["n"] = ns;
      json all = json::array();
      for (const auto& ir : v.all_intersections) {
        json e = json::array();
        e.push_back(subgroup_id(ir.h));
        for (auto n : ir.ns) e.push_back(subgroup_id(n));
        all.push_back(e);
      }
      out["all"] = all;
      break;
    }
    case Verdict::Kind::complement: {
      out["h"] = subgroup_id(v.complement->h);
      out["n"] = subgroup_id(v.complement->n);
      json rel = json::object();
      for (std::size_t j = 0; j < v.complement->relation.size(); ++j) {
        if (v.complement->relation[j] != 0) rel[a.irreps()[j].label()] = v.complement->relation[j];
      }
      out["relation"] = rel;
      break;
    }
    case Verdict::Kind::unresolved:
      break;
  }
  return out;
}

std::string render_verdict(const GroupAnalysis& a, const Verdict& v, Format f) {
  if (f == Format::json) {
    json out{{"irrep", a.irreps()[v.irrep].label()}, {"verdict", verdict_json(a, v)}, {"subgroups", subgroups_json(a)}};
    return out.dump(2) + "\n";
  }
  std::ostringstream o;
  o << a.irreps()[v.irrep].label() << ": " << verdict_kind(v.kind) << " " << witness_text(a, v) << "\n";
  std::set<std::size_t> used;
  auto note = [&](std::size_t s) { used.insert(s); };
  if (v.prym) {
    note(v.prym->h);
    note(v.prym->n);
  }
  if (v.intersection) {
    note(v.intersection->h);
    for (auto n : v.intersection->ns) note(n);
  }
  if (v.complement) {
    note(v.complement->h);
    note(v.complement->n);
  }
  for (auto s : used) o << "  " << subgroup_id(s) << " = " << subgroup_generators(a, s) << "\n";
  if (v.all_pairs.size() > 1) o << "  " << v.all_pairs.size() << " Prym pairs in total\n";
  if (v.all_intersections.size() > 1) o << "  " << v.all_intersections.size() << " minimal intersections in total\n";
  return o.str();
}

std::string render_full_report(const GroupAnalysis& a, const FullReport& r, Format f) {
  const std::size_t triv = trivial_irrep(a);
  std::map<std::size_t, const Verdict*> by_irrep;
  for (const auto& v : r.verdicts) by_irrep[v.irrep] = &v;
  if (f == Format::json) {
    json factors = json::array();
    for (const auto& fa : r.jacobian.factors) {
      if (fa.exponent == 0) continue;
      json e{{"irrep", a.irreps()[fa.irrep].label()}, {"exponent", fa.exponent}};
      if (fa.irrep == triv) {
        e["verdict"] = {{"kind", "Quotient"}, {"variety", "JW_G"}};
      } else {
        e["verdict"] = verdict_json(a, *by_irrep.at(fa.irrep));
      }
      e["schur"] = fa.provenance;
      e["conditional"] = fa.conditional;
      factors.push_back(e);
    }
    json out{{"subject", "JW"}, {"factors", factors}, {"conditional", r.jacobian.conditional()},
             {"subgroups", subgroups_json(a)}};
    return out.dump(2) + "\n";
  }
  std::ostringstream o;
  std::vector<std::string> defs;
  std::string line = "JW ~";
  std::string reps;
  std::set<std::size_t> used;
  bool first = true;
  int b_count = 0;
  for (const auto& fa : r.jacobian.factors) {
    if (fa.exponent == 0) continue;
    std::string var;
    if (fa.irrep == triv) {
      var = "JW_G";
    } else {
      const Verdict& v = *by_irrep.at(fa.irrep);
      if (v.kind == Verdict::Kind::prym_pair) {
        var = prym_text(v.prym->h, v.prym->n);
        used.insert(v.prym->h);
        used.insert(v.prym->n);
      } else {
        var = "B" + std::to_string(++b_count);
        defs.push_back(var + " = " + witness_text(a, v) +
                       (v.kind == Verdict::Kind::complement ? "  [quasi-Prym: no Prym pair or intersection found]" : ""));
        if (v.intersection) {
          used.insert(v.intersection->h);
          for (auto n : v.intersection->ns) used.insert(n);
        }
        if (v.complement) {
          used.insert(v.complement->h);
          used.insert(v.complement->n);
        }
      }
    }
    line += (first ? " " : " x ") + power(var, fa.exponent);
    reps += (first ? "" : " + ") + a.irreps()[fa.irrep].label();
    first = false;
  }
  o << line << "\n";
  o << "associated rational representations: " << reps << "\n";
  for (const auto& d : defs) o << d << "\n";
  for (auto s : used) o << subgroup_id(s) << " = " << subgroup_generators(a, s) << " (order " << a.lattice()[s].order() << ")\n";
  for (const auto& fa : r.jacobian.factors) {
    if (fa.exponent != 0 && fa.conditional) {
      o << "conditional: " << a.irreps()[fa.irrep].label() << " uses " << fa.provenance << "\n";
    }
  }
  return o.str();
}

json transcript_json(const Transcript& t) {
  json checks = json::array();
  for (const auto& c : t.checks) {
    json e{{"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"all_pass", t.all_pass()}, {"checks", checks}};
}

std::string render_transcript(const Transcript& t, Format f) {
  if (f == Format::json) return transcript_json(t).dump(2) + "\n";
  return t.render();
}

}  // namespace isotypic
