#include "isotypic/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "isotypic/decomposition.hpp"
#include "isotypic/errors.hpp"
#include "isotypic/expr_eval.hpp"

namespace isotypic {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string scalar_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ValidationError(where + ": scalars must be strings or integers");
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ValidationError(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& where) {
  std::map<std::string, std::string> out;
  if (j.is_null()) return out;
  if (!j.is_object()) throw ValidationError(where + ": expected an object of strings");
  for (const auto& [k, v] : j.items()) out[k] = scalar_text(v, where);
  return out;
}

struct PolyEnv {
  std::string var;
  QPoly number(const Rational& q) const { return QPoly(q); }
  QPoly symbol(const std::string& name) const {
    if (name != var) throw ValidationError("unknown symbol '" + name + "' in polynomial");
    return QPoly::x();
  }
  QPoly call(const std::string& name, const QPoly& arg) const { return symbol(name) * arg; }
  QPoly add(QPoly a, const QPoly& b) const { return a += b; }
  QPoly sub(QPoly a, const QPoly& b) const { return a -= b; }
  QPoly mul(const QPoly& a, const QPoly& b) const { return a * b; }
  QPoly div(const QPoly& a, const QPoly& b) const {
    if (b.degree() != 0) throw ValidationError("polynomial division is only allowed by nonzero constants");
    return a * (Rational(1) / b.leading());
  }
  QPoly neg(const QPoly& a) const { return -a; }
  QPoly pow(const QPoly& a, long k) const {
    if (k < 0) throw ValidationError("negative exponent in polynomial");
    QPoly out(Rational(1));
    for (long i = 0; i < k; ++i) out = out * a;
    return out;
  }
};

CycValue promote(const CycValue& v, int level, const std::string& what) {
  if (level % v.level() != 0) {
    throw ValidationError(what + ": value of level " + std::to_string(v.level()) + " does not fit level " +
                          std::to_string(level));
  }
  return v.at_level(level);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

// ---- groups -----------------------------------------------------------------

GroupSource load_group(const json& j, const Bounds& bounds) {
  if (!j.is_object()) throw ValidationError("group file: expected an object");
  GroupSource out;
  out.name = j.value("name", std::string());
  std::vector<std::string> names;
  if (j.contains("generators")) names = string_list(j.at("generators"), "generators");
  int sources = j.contains("presentation") + j.contains("permutations") + j.contains("cayley");
  if (sources != 1) throw ValidationError("group file: exactly one of presentation, permutations, cayley is required");

  if (j.contains("presentation")) {
    const json& p = j.at("presentation");
    const json& rels = p.is_array() ? p : require(p, "relators", "presentation");
    if (!rels.is_array()) throw ValidationError("presentation: relators must be an array");
    if (names.empty()) throw ValidationError("presentation: generator names are required");
    std::vector<Word> words;
    for (const auto& r : rels) {
      if (r.is_string()) {
        words.push_back(parse_word(r.get<std::string>(), names));
      } else if (r.is_array()) {
        Word w;
        for (const auto& l : r) {
          if (!l.is_number_integer()) throw ValidationError("presentation: letters must be signed integers");
          int v = l.get<int>();
          if (v == 0 || static_cast<std::size_t>(std::abs(v)) > names.size()) {
            throw ValidationError("presentation: letter " + std::to_string(v) + " out of range");
          }
          w.push_back(v);
        }
        words.push_back(std::move(w));
      } else {
        throw ValidationError("presentation: relators must be strings or integer arrays");
      }
    }
    out.group = FiniteGroup::from_presentation(names.size(), words, names, bounds);
  } else if (j.contains("permutations")) {
    const json& p = j.at("permutations");
    if (!p.is_array()) throw ValidationError("permutations: expected an array of arrays");
    std::vector<std::vector<std::uint32_t>> perms;
    for (const auto& row : p) {
      if (!row.is_array()) throw ValidationError("permutations: expected an array of arrays");
      std::vector<std::uint32_t> perm;
      for (const auto& v : row) {
        if (!v.is_number_unsigned()) throw ValidationError("permutations: entries must be non-negative integers");
        perm.push_back(v.get<std::uint32_t>());
      }
      perms.push_back(std::move(perm));
    }
    if (!names.empty() && names.size() != perms.size()) {
      throw ValidationError("permutations: generator name count does not match");
    }
    out.group = FiniteGroup::from_permutations(perms, names, bounds);
  } else {
    const json& c = j.at("cayley");
    const json& t = c.is_array() ? c : require(c, "table", "cayley");
    std::vector<std::vector<Element>> table;
    for (const auto& row : t) {
      if (!row.is_array()) throw ValidationError("cayley: expected an array of arrays");
      std::vector<Element> r;
      for (const auto& v : row) {
        if (!v.is_number_unsigned()) throw ValidationError("cayley: entries must be non-negative integers");
        r.push_back(v.get<Element>());
      }
      table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (c.is_object() && c.contains("labels")) labels = string_list(c.at("labels"), "cayley labels");
    if (c.is_array() && j.contains("labels")) labels = string_list(j.at("labels"), "cayley labels");
    out.group = FiniteGroup::from_cayley_table(table, labels);
  }

  if (j.contains("schur")) {
    for (const auto& d : j.at("schur")) {
      SchurDeclaration decl;
      decl.selector = parse_irrep_selector(scalar_text(require(d, "irrep", "schur"), "schur"));
      const json& m = require(d, "m", "schur");
      if (!m.is_number_integer() || m.get<long>() <= 0) throw ValidationError("schur: m must be a positive integer");
      decl.m = m.get<long>();
      decl.source = d.value("source", std::string());
      decl.asserted = d.value("asserted", false);
      out.schur.push_back(std::move(decl));
    }
  }
  return out;
}

GroupSource load_group_file(const std::filesystem::path& path, const Bounds& bounds) {
  GroupSource g = load_group(read_json_file(path), bounds);
  if (g.name.empty()) g.name = path.stem().string();
  return g;
}

json group_to_json(const FiniteGroup& g) {
  json out;
  out["order"] = g.order();
  out["generators"] = g.generator_names();
  json gens = json::array();
  for (auto x : g.generators()) gens.push_back(g.label(x));
  out["generator_elements"] = gens;
  out["exponent"] = g.exponent();
  out["abelian"] = g.is_abelian();
  json classes = json::array();
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const auto& cls = g.classes()[c];
    classes.push_back({{"representative", g.label(cls.representative)},
                       {"size", cls.members.size()},
                       {"element_order", g.element_order(cls.representative)}});
  }
  out["classes"] = classes;
  out["labels"] = g.labels();
  out["cayley"] = g.cayley_table();
  return out;
}

// ---- fields -----------------------------------------------------------------

QPoly parse_polynomial(const std::string& text, const std::string& var) {
  PolyEnv env{var};
  return evaluate_expr<QPoly>(parse_expression(text), env);
}

NumFieldPtr load_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return NumField::rationals();
    throw ValidationError("field: unknown field '" + j.get<std::string>() + "'");
  }
  NumField::Spec spec;
  spec.minpoly = parse_polynomial(scalar_text(require(j, "minpoly", "field"), "field minpoly"));
  const json& autos = require(j, "automorphisms", "field");
  if (!autos.is_array()) throw ValidationError("field: automorphisms must be an array");
  for (const auto& a : autos) {
    if (a.is_string()) {
      spec.automorphisms.push_back(parse_polynomial(a.get<std::string>()));
      spec.automorphism_names.emplace_back();
    } else {
      spec.automorphisms.push_back(parse_polynomial(scalar_text(require(a, "image", "automorphism"), "automorphism")));
      spec.automorphism_names.push_back(a.value("name", std::string()));
    }
  }
  auto index_of = [&](const json& f) -> std::size_t {
    if (f.is_number_unsigned()) return f.get<std::size_t>();
    std::string name = scalar_text(f, "fixers");
    for (std::size_t i = 0; i < spec.automorphism_names.size(); ++i) {
      if (spec.automorphism_names[i] == name) return i;
    }
    throw ValidationError("field: unknown automorphism '" + name + "'");
  };
  if (j.contains("fixers")) {
    for (const auto& f : j.at("fixers")) spec.subfield_fixers.push_back(index_of(f));
  } else {
    for (std::size_t i = 0; i < spec.automorphisms.size(); ++i) spec.subfield_fixers.push_back(i);
  }
  for (const auto& [name, text] : string_map(j.value("names", json()), "field names")) {
    spec.names[name] = parse_polynomial(text);
  }
  return NumField::create(std::move(spec));
}

json field_to_json(const NumFieldPtr& field) {
  if (field->degree() == 1 && field->names().empty()) return "Q";
  json out;
  out["minpoly"] = field->minpoly().to_string("t");
  json autos = json::array();
  for (std::size_t i = 0; i < field->automorphism_count(); ++i) {
    autos.push_back({{"name", field->automorphism_name(i)}, {"image", field->automorphism_image(i).to_string("t")}});
  }
  out["automorphisms"] = autos;
  json fixers = json::array();
  for (auto f : field->subfield_fixers()) fixers.push_back(f);
  out["fixers"] = fixers;
  json names = json::object();
  for (const auto& [k, v] : field->names()) names[k] = v.to_string("t");
  out["names"] = names;
  return out;
}

// ---- cyclotomic values and character tables ----------------------------------

CycValue load_cyc_value(const json& j, int level, const std::map<std::string, std::string>& names) {
  if (j.is_object()) {
    int l = require(j, "level", "cyclotomic value").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : require(j, "coeffs", "cyclotomic value")) coeffs.push_back(parse_rational(scalar_text(c, "coeffs")));
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(l))) {
      throw ValidationError("cyclotomic value: expected " + std::to_string(euler_phi(l)) + " coefficients");
    }
    return promote(CycValue(l, coeffs), level, "cyclotomic value");
  }
  auto ctx = cyclotomic_context(level, names);
  return promote(evaluate_scalar(scalar_text(j, "cyclotomic value"), ctx), level, "cyclotomic value");
}

json cyc_value_to_json(const CycValue& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_string(c));
  return {{"level", v.level()}, {"coeffs", coeffs}};
}

CharacterTable load_character_table(const json& j, const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const int level = j.value("level", static_cast<int>(g.exponent()));
  if (level % static_cast<int>(g.exponent()) != 0) throw ValidationError("character table: level must be a multiple of the exponent");
  auto names = string_map(j.value("names", json()), "character table names");
  auto ctx = cyclotomic_context(level, names);
  auto labels = string_list(require(j, "classes", "character table"), "character table classes");
  if (labels.size() != g.classes().size()) {
    throw ValidationError("character table: expected " + std::to_string(g.classes().size()) + " classes, got " +
                          std::to_string(labels.size()));
  }
  std::vector<std::size_t> column_class;
  std::set<std::size_t> seen;
  for (const auto& l : labels) {
    std::size_t c = g.class_of(g.parse_element(l));
    if (!seen.insert(c).second) throw ValidationError("character table: class of '" + l + "' listed twice");
    column_class.push_back(c);
  }
  std::vector<std::vector<CycValue>> rows;
  for (const auto& row : require(j, "characters", "character table")) {
    if (!row.is_array() || row.size() != labels.size()) {
      throw ValidationError("character table: row " + std::to_string(rows.size() + 1) + " has the wrong length");
    }
    std::vector<CycValue> values(labels.size(), CycValue(level));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      values[column_class[i]] =
          row[i].is_object() ? load_cyc_value(row[i], level)
                             : promote(evaluate_scalar(scalar_text(row[i], "character value"), ctx), level, "character value");
    }
    rows.push_back(std::move(values));
  }
  return CharacterTable(group, std::move(rows));
}

json character_table_to_json(const CharacterTable& table) {
  const FiniteGroup& g = table.group();
  json out;
  out["level"] = table.level();
  json classes = json::array();
  for (const auto& c : g.classes()) classes.push_back(g.label(c.representative));
  out["classes"] = classes;
  json chars = json::array();
  for (const auto& row : table.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    chars.push_back(r);
  }
  out["characters"] = chars;
  return out;
}

// ---- representations ---------------------------------------------------------

RepSource load_rep(const json& j, const CharacterTable& table) {
  const GroupPtr& group = table.group_ptr();
  NumFieldPtr field = load_field(require(j, "field", "representation"));
  auto ctx = numfield_context(field);
  const json& gens = require(j, "generators", "representation");
  const auto& names = group->generator_names();
  std::vector<MatrixRep::Matrix> mats;
  for (const auto& name : names) {
    if (!gens.contains(name)) throw ValidationError("representation: no matrix for generator " + name);
    MatrixRep::Matrix m;
    for (const auto& row : gens.at(name)) {
      std::vector<NumFieldValue> r;
      for (const auto& e : row) r.push_back(evaluate_scalar(scalar_text(e, "matrix entry"), ctx));
      m.push_back(std::move(r));
    }
    mats.push_back(std::move(m));
  }
  if (gens.size() != names.size()) throw ValidationError("representation: matrices for unknown generators");

  auto value_names = string_map(j.value("value_names", json()), "representation value names");
  std::vector<std::pair<CycValue, NumFieldValue>> pairs;
  if (j.contains("embedding")) {
    for (const auto& e : j.at("embedding")) {
      CycValue v = load_cyc_value(require(e, "value", "embedding"), table.level(), value_names);
      NumFieldValue im = evaluate_scalar(scalar_text(require(e, "image", "embedding"), "embedding"), ctx);
      pairs.emplace_back(std::move(v), std::move(im));
    }
  }
  ValueEmbedding embedding(field, table.level(), std::move(pairs));
  MatrixRep rep(group, field, std::move(mats));
  std::optional<std::size_t> chi;
  if (j.contains("character") && !(j.at("character").is_string() && j.at("character") == "auto")) {
    const json& c = j.at("character");
    if (!c.is_number_unsigned() || c.get<std::size_t>() == 0 || c.get<std::size_t>() > table.size()) {
      throw ValidationError("representation: character must be \"auto\" or a 1-based row number");
    }
    chi = c.get<std::size_t>() - 1;
  }
  std::size_t linked = rep.link_character(table, embedding, chi);
  return RepSource{std::move(rep), std::move(embedding), linked};
}

// ---- algebra elements --------------------------------------------------------

namespace {

template <class S>
json coeffs_json(const AlgebraElement<S>& a) {
  json coeffs = json::array();
  for (Element x = 0; x < a.group().order(); ++x) {
    if (is_zero(a[x])) continue;
    coeffs.push_back({x, scalar_string(a[x])});
  }
  return coeffs;
}

}  // namespace

json algebra_element_to_json(const QElement& a) { return {{"field", "Q"}, {"coeffs", coeffs_json(a)}}; }

json algebra_element_to_json(const CycElement& a) {
  return {{"field", {{"cyclotomic", a.zero().level()}}}, {"coeffs", coeffs_json(a)}};
}

json algebra_element_to_json(const LElement& a) {
  return {{"field", field_to_json(a.zero().field())}, {"coeffs", coeffs_json(a)}};
}

LElement load_algebra_element(const json& j, const GroupPtr& group, const NumFieldPtr& field,
                              const ValueEmbedding* embedding) {
  const FiniteGroup& g = *group;
  if (j.is_string()) return evaluate_algebra(j.get<std::string>(), group, numfield_context(field));
  if (j.contains("expr")) return evaluate_algebra(scalar_text(j.at("expr"), "expr"), group, numfield_context(field));
  const json& coeffs = require(j, "coeffs", "algebra element");
  const json fj = j.value("field", json("Q"));
  LElement out(group, NumFieldValue(field));
  std::function<NumFieldValue(const json&)> scalar;
  auto lctx = numfield_context(field);
  if (fj.is_object() && fj.contains("cyclotomic")) {
    if (!embedding) throw ValidationError("algebra element: cyclotomic coefficients need a declared embedding");
    int level = fj.at("cyclotomic").get<int>();
    scalar = [=](const json& s) {
      return embedding->map_or_throw(evaluate_scalar(scalar_text(s, "coefficient"), cyclotomic_context(level)));
    };
  } else if (fj == json("Q")) {
    scalar = [&](const json& s) { return NumFieldValue(field, parse_rational(scalar_text(s, "coefficient"))); };
  } else {
    NumFieldPtr declared = load_field(fj);
    if (declared->minpoly() != field->minpoly()) throw ValidationError("algebra element: field does not match");
    scalar = [&](const json& s) { return evaluate_scalar(scalar_text(s, "coefficient"), lctx); };
  }
  for (const auto& e : coeffs) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("algebra element: coeffs entries are [index, scalar]");
    Element x = e[0].is_string() ? g.parse_element(e[0].get<std::string>()) : e[0].get<Element>();
    if (x >= g.order()) throw ValidationError("algebra element: index out of range");
    out[x] += scalar(e[1]);
  }
  return out;
}

// ---- fixture manifests -------------------------------------------------------

Subgroup subgroup_from_words(const FiniteGroup& g, const std::vector<std::string>& words) {
  std::vector<Element> gens;
  for (const auto& w : words) {
    if (w == "G") {
      for (auto x : g.generators()) gens.push_back(x);
    } else {
      gens.push_back(g.parse_element(w));
    }
  }
  return subgroup_generated(g, gens);
}

namespace {

Subgroup subgroup_from_words(const FiniteGroup& g, const json& words) {
  return subgroup_from_words(g, string_list(words, "subgroup"));
}

std::string words_text(const json& words) {
  std::string out = "<";
  bool first = true;
  for (const auto& w : words) {
    out += (first ? "" : ", ") + w.get<std::string>();
    first = false;
  }
  return out + ">";
}

}  // namespace

Transcript verify_manifest(const std::filesystem::path& path, const Bounds& bounds) {
  const json m = read_json_file(path);
  const auto base = path.parent_path();
  GroupSource gs = load_group_file(resolve(base, scalar_text(require(m, "group", "manifest"), "group")), bounds);
  const GroupPtr group = gs.group;
  const FiniteGroup& g = *group;

  std::optional<CharacterTable> table;
  if (m.contains("table")) table = load_character_table(read_json_file(resolve(base, m.at("table"))), group);
  AnalysisOptions opts;
  opts.bounds = bounds;
  opts.schur = gs.schur;
  std::optional<GroupAnalysis> analysis;
  auto get_analysis = [&]() -> const GroupAnalysis& {
    if (!analysis) analysis.emplace(group, table, opts);
    return *analysis;
  };

  std::optional<RepSource> rep;
  NumFieldPtr field = NumField::rationals();
  if (m.contains("rep")) {
    rep.emplace(load_rep(read_json_file(resolve(base, m.at("rep"))), get_analysis().table()));
    field = rep->rep.field();
  } else if (m.contains("field")) {
    field = load_field(m.at("field"));
  }
  auto ctx = numfield_context(field);
  auto to_l = [&](const QElement& q) { return embed_rational(q, field); };
  auto selector_irrep = [&](const json& s) {
    return get_analysis().find_irrep(parse_irrep_selector(scalar_text(s, "irrep")));
  };

  std::map<std::string, LElement> named;
  if (m.contains("computed")) {
    for (const auto& [name, spec] : m.at("computed").items()) {
      std::string kind = scalar_text(require(spec, "kind", name), name);
      if (kind == "eV") {
        const auto& a = get_analysis();
        std::size_t chi;
        if (spec.value("irrep", json("rep")) == json("rep")) {
          if (!rep) throw ValidationError(name + ": irrep \"rep\" needs a representation");
          chi = rep->character;
        } else {
          const auto& sel = parse_irrep_selector(scalar_text(spec.at("irrep"), name));
          if (sel.members.size() != 1) throw ValidationError(name + ": eV needs a single character number");
          chi = sel.members[0] - 1;
        }
        CycElement ev = central_idempotent_eV(a.table(), chi);
        if (rep) {
          named.insert_or_assign(name, embed_values(ev, rep->embedding));
        } else {
          ValueEmbedding none(field, a.table().level(), {});
          named.insert_or_assign(name, embed_values(ev, none));
        }
      } else if (kind == "eW") {
        const auto& a = get_analysis();
        named.insert_or_assign(name, to_l(central_idempotent_eW(a.table(), a.irreps()[selector_irrep(spec.at("irrep"))])));
      } else if (kind == "pH") {
        named.insert_or_assign(name, to_l(projector_pH(group, subgroup_from_words(g, require(spec, "subgroup", name)))));
      } else if (kind == "fH") {
        const auto& a = get_analysis();
        QElement ew = central_idempotent_eW(a.table(), a.irreps()[selector_irrep(spec.at("irrep"))]);
        named.insert_or_assign(
            name, to_l(subgroup_idempotent_fH(group, subgroup_from_words(g, require(spec, "subgroup", name)), ew)));
      } else if (kind == "ell") {
        if (!rep) throw ValidationError(name + ": ell needs a representation");
        named.insert_or_assign(name, ell_from_representation(rep->rep, require(spec, "index", name).get<std::size_t>() - 1));
      } else {
        throw ValidationError(name + ": unknown computed kind '" + kind + "'");
      }
    }
  }
  if (m.contains("elements")) {
    for (const auto& [name, spec] : m.at("elements").items()) {
      LElement e = spec.is_string() ? evaluate_algebra(spec.get<std::string>(), group, ctx, named)
                                    : load_algebra_element(spec, group, field, rep ? &rep->embedding : nullptr);
      named.insert_or_assign(name, std::move(e));
    }
  }
  auto eval = [&](const json& text) { return evaluate_algebra(scalar_text(text, "check"), group, ctx, named); };

  Transcript t;
  std::map<std::string, std::size_t> bound;  // irrep variables of rho relations
  for (const auto& c : require(m, "checks", "manifest")) {
    const std::string kind = scalar_text(require(c, "kind", "check"), "check kind");
    const std::string a_text = c.contains("a") ? scalar_text(c.at("a"), "a") : std::string();
    const std::string b_text = c.contains("b") ? scalar_text(c.at("b"), "b") : std::string();
    std::string name = c.value("name", std::string());
    auto label = [&](const std::string& fallback) { return name.empty() ? fallback : name; };
    if (kind == "equal") {
      t.add(label(a_text + " = " + b_text), eval(c.at("a")) == eval(c.at("b")));
    } else if (kind == "zero") {
      t.add(label(a_text + " = 0"), eval(c.at("a")).is_zero());
    } else if (kind == "idempotent") {
      t.add(label(a_text + " idempotent"), is_idempotent(eval(c.at("a"))));
    } else if (kind == "orthogonal") {
      auto a = eval(c.at("a")), b = eval(c.at("b"));
      t.add(label(a_text + ", " + b_text + " orthogonal"), are_orthogonal(a, b));
    } else if (kind == "central") {
      t.add(label(a_text + " central"), is_central(eval(c.at("a"))));
    } else if (kind == "rational") {
      t.add(label(a_text + " has rational coefficients"), to_rational(eval(c.at("a"))).has_value());
    } else if (kind == "ideal_dim") {
      auto a = eval(c.at("a"));
      std::string over = c.value("over", std::string("L"));
      std::size_t expected = require(c, "expected", "ideal_dim").get<std::size_t>();
      std::size_t dim = 0;
      if (over == "Q") {
        auto q = to_rational(a);
        if (!q) {
          t.add(label("ideal dim of " + a_text + " over Q"), false, "coefficients are not rational");
          continue;
        }
        dim = ideal_dim(*q);
      } else {
        dim = ideal_dim(a);
      }
      t.add(label("ideal dim of " + a_text + " over " + over + " = " + std::to_string(expected)), dim == expected,
            "got " + std::to_string(dim));
    } else if (kind == "fixed_by") {
      std::vector<std::size_t> autos;
      for (const auto& n : string_list(require(c, "automorphisms", "fixed_by"), "automorphisms")) {
        auto i = field->find_automorphism(n);
        if (!i) throw ValidationError("unknown automorphism '" + n + "'");
        autos.push_back(*i);
      }
      t.add(label(a_text + " fixed by " + words_text(c.at("automorphisms"))), fixed_by(eval(c.at("a")), autos));
    } else if (kind == "bi_invariant") {
      auto a = eval(c.at("a"));
      Subgroup h = subgroup_from_words(g, require(c, "subgroup", "bi_invariant"));
      bool ok = true;
      for (auto x : h.members) ok = ok && a.left_translate(x) == a && a.right_translate(x) == a;
      t.add(label(a_text + " invariant under " + words_text(c.at("subgroup")) + " on both sides"), ok);
    } else if (kind == "multiplicity") {
      const auto& an = get_analysis();
      Subgroup h = subgroup_from_words(g, require(c, "subgroup", "multiplicity"));
      std::size_t s = an.lattice().class_of(h);
      auto sel = parse_irrep_selector(scalar_text(require(c, "irrep", "multiplicity"), "irrep"));
      if (sel.members.empty()) throw ValidationError("multiplicity: irrep must name a character");
      long expected = require(c, "expected", "multiplicity").get<long>();
      long got = an.fixed(s, sel.members[0] - 1);
      t.add(label("<rho_" + words_text(c.at("subgroup")) + ", V" + std::to_string(sel.members[0]) + "> = " +
                  std::to_string(expected)),
            got == expected, "got " + std::to_string(got));
    } else if (kind == "rho_relation") {
      // rho_H - rho_N = sum of terms; a term key is an irrep selector or a variable bound on first use.
      const auto& an = get_analysis();
      std::size_t h = an.lattice().class_of(subgroup_from_words(g, require(c, "h", "rho_relation")));
      std::size_t n = an.lattice().class_of(subgroup_from_words(g, require(c, "n", "rho_relation")));
      auto d = rho_difference(an, h, n);
      std::string text = "rho_" + words_text(c.at("h")) + " - rho_" + words_text(c.at("n")) + " =";
      bool ok = true;
      std::string detail;
      std::vector<bool> used(d.size(), false);
      std::vector<std::pair<std::string, long>> unbound;
      std::optional<std::string> rest;
      for (const auto& [key, mult] : require(c, "terms", "rho_relation").items()) {
        if (mult.is_string()) {
          if (mult != "rest" || rest) throw ValidationError("rho_relation: only one term may be \"rest\"");
          rest = key;
          continue;
        }
        long mu = mult.get<long>();
        text += " " + (mu == 1 ? std::string() : std::to_string(mu)) + key;
        std::optional<std::size_t> j;
        if (bound.count(key)) {
          j = bound.at(key);
        } else {
          try {
            j = an.find_irrep(parse_irrep_selector(key));
            bound[key] = *j;
          } catch (const ValidationError&) {
            unbound.emplace_back(key, mu);
          }
        }
        if (j) {
          ok = ok && d[*j] == mu && !used[*j];
          used[*j] = true;
        }
      }
      for (const auto& [key, mu] : unbound) {
        std::vector<std::size_t> cands;
        for (std::size_t j = 0; j < d.size(); ++j) {
          bool taken = used[j];
          for (const auto& [k2, j2] : bound) taken = taken || j2 == j;
          if (!taken && d[j] == mu) cands.push_back(j);
        }
        if (cands.size() != 1) {
          ok = false;
          detail = "cannot bind " + key;
          break;
        }
        bound[key] = cands[0];
        used[cands[0]] = true;
      }
      if (rest && detail.empty()) {
        // the rest: every remaining component, disjoint from all bound irreducibles
        bool any = false;
        for (std::size_t j = 0; j < d.size(); ++j) {
          if (used[j] || d[j] == 0) continue;
          any = true;
          for (const auto& [k2, j2] : bound) ok = ok && j2 != j;
          used[j] = true;
        }
        ok = ok && any;
        text += " " + *rest;
      }
      for (std::size_t j = 0; j < d.size(); ++j) ok = ok && (used[j] || d[j] == 0);
      if (detail.empty()) {
        detail = "difference";
        for (long v : d) detail += " " + std::to_string(v);
      }
      t.add(label(text), ok, detail);
    } else {
      throw ValidationError("unknown check kind '" + kind + "'");
    }
  }
  return t;
}

}  // namespace isotypic
