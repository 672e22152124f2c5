#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "isotypic/report.hpp"

using namespace isotypic;

namespace {

struct Config {
  std::string group_path;
  std::string table_path;
  std::string rep_path;
  std::vector<std::string> schur;
  std::string format = "text";
  int max_arity = 4;
  std::size_t max_order = Bounds{}.max_group_order;
  std::size_t max_lattice = Bounds{}.max_lattice_order;
  std::string irrep;
  std::string h;
  std::string n;
  std::string manifest;
  bool compute = false;
};

Format format_of(const Config& c) { return c.format == "json" ? Format::json : Format::text; }

Bounds bounds_of(const Config& c) {
  Bounds b;
  b.max_group_order = c.max_order;
  b.max_lattice_order = c.max_lattice;
  b.max_intersection_arity = c.max_arity;
  return b;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string w;
  while (std::getline(ss, w, ',')) {
    w.erase(0, w.find_first_not_of(' '));
    w.erase(w.find_last_not_of(' ') + 1);
    if (!w.empty()) out.push_back(w);
  }
  if (out.empty()) throw ValidationError("empty subgroup generator list");
  return out;
}

SchurDeclaration parse_assertion(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw ValidationError("--assert-schur expects IRREP=m, got \"" + text + "\"");
  SchurDeclaration d;
  d.selector = parse_irrep_selector(text.substr(0, eq));
  try {
    std::size_t used = 0;
    d.m = std::stol(text.substr(eq + 1), &used);
    if (used != text.size() - eq - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ValidationError("Schur index in \"" + text + "\" is not an integer");
  }
  if (d.m < 1) throw ValidationError("Schur index in \"" + text + "\" must be positive");
  d.source = "asserted on the command line";
  d.asserted = true;
  return d;
}

struct Job {
  GroupSource source;
  std::optional<GroupAnalysis> analysis;
};

Job load(const Config& c, bool need_analysis = true) {
  Job job;
  const Bounds b = bounds_of(c);
  job.source = load_group_file(c.group_path, b);
  if (!need_analysis) return job;
  std::optional<CharacterTable> table;
  if (!c.table_path.empty() && !c.compute) table = load_character_table(read_json_file(c.table_path), job.source.group);
  AnalysisOptions opts;
  opts.bounds = b;
  opts.schur = job.source.schur;
  for (const auto& s : c.schur) opts.schur.push_back(parse_assertion(s));
  job.analysis.emplace(job.source.group, std::move(table), std::move(opts));
  return job;
}

std::size_t irrep_index(const GroupAnalysis& a, const std::string& text) {
  if (text.empty()) throw ValidationError("--irrep is required");
  return a.find_irrep(parse_irrep_selector(text));
}

std::string render_q(const QElement& e, Format f) {
  return f == Format::json ? algebra_element_to_json(e).dump() : e.to_string();
}

int cmd_group_info(const Config& c) {
  auto job = load(c, false);
  GroupAnalysis a(job.source.group, std::nullopt, AnalysisOptions{bounds_of(c), job.source.schur});
  std::cout << render_group_info(a, job.source.name, format_of(c));
  return 0;
}

int cmd_chartable(const Config& c) {
  auto job = load(c);
  std::cout << render_character_table(job.analysis->table(), job.analysis->irreps(), format_of(c));
  return 0;
}

int cmd_central(const Config& c) {
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  const std::size_t w = irrep_index(a, c.irrep);
  const RationalIrrep& irr = a.irreps()[w];
  const Format f = format_of(c);
  QElement ew = central_idempotent_eW(a.table(), irr);
  std::vector<CycElement> evs;
  for (auto chi : irr.orbit) evs.push_back(central_idempotent_eV(a.table(), chi));

  Transcript t;
  t.add("e_W idempotent", is_idempotent(ew));
  t.add("e_W central", is_central(ew));
  const std::size_t ew_dim = ideal_dim(ew);
  const auto ew_expected = static_cast<std::size_t>(irr.degree * irr.degree * static_cast<long>(irr.orbit.size()));
  t.add("ideal_dim(e_W) over Q", ew_dim == ew_expected,
        std::to_string(ew_dim) + ", expected " + std::to_string(ew_expected));
  CycElement sum = evs[0];
  for (std::size_t i = 1; i < evs.size(); ++i) sum += evs[i];
  const int level = sum.zero().level();
  auto ew_cyc = ew.map(sum.zero(), [&](const Rational& q) { return CycValue(level, q); });
  t.add("sum of e_V over the orbit equals e_W", sum == ew_cyc);
  for (std::size_t i = 0; i < evs.size(); ++i) {
    t.add("e_V" + std::to_string(irr.orbit[i] + 1) + " idempotent and central", is_idempotent(evs[i]) && is_central(evs[i]));
    for (std::size_t j = i + 1; j < evs.size(); ++j) {
      t.add("e_V" + std::to_string(irr.orbit[i] + 1) + " e_V" + std::to_string(irr.orbit[j] + 1) + " orthogonal",
            are_orthogonal(evs[i], evs[j]));
    }
  }
  std::string clash;
  for (std::size_t v = 0; v < a.irreps().size(); ++v) {
    if (v != w && !are_orthogonal(ew, central_idempotent_eW(a.table(), a.irreps()[v]))) clash += " " + a.irreps()[v].label();
  }
  t.add("e_W orthogonal to the other e_W'", clash.empty(), clash.empty() ? "" : "fails for" + clash);

  if (f == Format::json) {
    json out{{"irrep", irr.label()}, {"eW", algebra_element_to_json(ew)}};
    json ev = json::object();
    for (std::size_t i = 0; i < evs.size(); ++i) ev["V" + std::to_string(irr.orbit[i] + 1)] = algebra_element_to_json(evs[i]);
    out["eV"] = ev;
    out["transcript"] = transcript_json(t);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "e_W[" << irr.label() << "] = " << ew.to_string() << "\n";
    for (std::size_t i = 0; i < evs.size(); ++i) {
      std::cout << "e_V" << irr.orbit[i] + 1 << " = " << evs[i].to_string() << "\n";
    }
    std::cout << t.render();
  }
  return t.all_pass() ? 0 : 3;
}

int cmd_subgroup(const Config& c) {
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  const std::size_t w = irrep_index(a, c.irrep);
  const RationalIrrep& irr = a.irreps()[w];
  if (c.h.empty()) throw ValidationError("--H is required");
  Subgroup h = subgroup_from_words(a.group(), split_words(c.h));
  const std::size_t s = a.lattice().class_of(h);
  QElement ew = central_idempotent_eW(a.table(), irr);
  QElement p = projector_pH(a.group_ptr(), h);
  QElement fh = subgroup_idempotent_fH(a.group_ptr(), h, ew);
  const long fixed = a.fixed(s, irr.orbit.front());

  Transcript t;
  t.add("f_H idempotent", is_idempotent(fh));
  t.add("f_H = p_H e_W = e_W p_H", fh == p * ew && fh == ew * p);
  bool inv = true;
  for (auto x : h.members) inv = inv && fh.left_translate(x) == fh && fh.right_translate(x) == fh;
  t.add("f_H two-sided H-invariant", inv);
  t.add("f_H = 0 iff dim V^H = 0", fh.is_zero() == (fixed == 0), "dim V^H = " + std::to_string(fixed));
  const std::size_t expected = static_cast<std::size_t>(fixed * irr.degree * static_cast<long>(irr.orbit.size()));
  const std::size_t dim = ideal_dim(fh);
  t.add("ideal_dim(f_H) over Q", dim == expected, std::to_string(dim) + ", expected " + std::to_string(expected));

  const Format f = format_of(c);
  if (f == Format::json) {
    json out{{"irrep", irr.label()},
             {"subgroup", subgroup_id(s)},
             {"order", h.order()},
             {"fixed_dim", fixed},
             {"zero", fh.is_zero()},
             {"fH", algebra_element_to_json(fh)},
             {"transcript", transcript_json(t)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "H = <" << c.h << "> (order " << h.order() << ", class " << subgroup_id(s) << "), dim V^H = " << fixed
              << "\n";
    std::cout << "f_H = " << render_q(fh, f) << (fh.is_zero() ? "  (zero: V has no H-fixed vectors)" : "") << "\n";
    std::cout << t.render();
  }
  return t.all_pass() ? 0 : 3;
}

int cmd_primitive(const Config& c) {
  if (c.rep_path.empty()) throw ValidationError("idempotents primitive requires --rep");
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  RepSource rep = load_rep(read_json_file(c.rep_path), a.table());
  const std::size_t w = a.irrep_of_character(rep.character);
  LElement ev = embed_values(central_idempotent_eV(a.table(), rep.character), rep.embedding);
  QElement ew = central_idempotent_eW(a.table(), a.irreps()[w]);
  const Format f = format_of(c);

  std::optional<IdempotentSystem> sys;
  Transcript t;
  try {
    sys = build_idempotent_system(rep.rep, ev, ew);
    t = verify_system(*sys);
  } catch (const InvariantError& e) {
    t.add("construction", false, e.what());
  }
  const auto& irr = a.irreps()[w];
  if (irr.schur.kind == SchurStatus::Kind::asserted || irr.schur.conditional()) {
    t.add("Schur index of " + irr.label() + " (" + irr.schur.describe() + ")", true, "certificates conditional on m");
  }

  if (f == Format::json) {
    json out{{"irrep", irr.label()}, {"character", "V" + std::to_string(rep.character + 1)}};
    if (sys) {
      json sel = json::array();
      for (auto j : sys->selected) sel.push_back(j + 1);
      out["selected"] = sel;
      out["m"] = sys->m;
      json u = json::array();
      for (const auto& row : sys->u) {
        json r = json::array();
        for (const auto& e : row) r.push_back(algebra_element_to_json(e));
        u.push_back(r);
      }
      out["u"] = u;
      json k = json::array();
      for (const auto& e : sys->k) k.push_back(algebra_element_to_json(e));
      out["k"] = k;
      json fs = json::array();
      for (const auto& e : sys->f) fs.push_back(algebra_element_to_json(e));
      out["f"] = fs;
    }
    out["transcript"] = transcript_json(t);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "irrep " << irr.label() << " from V" << rep.character + 1 << "\n";
    if (sys) {
      std::cout << "selected ell:";
      for (auto j : sys->selected) std::cout << " " << j + 1;
      std::cout << "\n";
      for (std::size_t s = 0; s < sys->u.size(); ++s) {
        for (std::size_t h = 0; h < sys->u[s].size(); ++h) {
          std::cout << "u_" << s + 1 << "^" << h + 1 << " = " << render_element(sys->u[s][h]) << "\n";
        }
      }
      for (std::size_t s = 0; s < sys->k.size(); ++s) std::cout << "k_" << s + 1 << " = " << render_element(sys->k[s]) << "\n";
      for (std::size_t s = 0; s < sys->f.size(); ++s) std::cout << "f_" << s + 1 << " = " << sys->f[s].to_string() << "\n";
    }
    std::cout << t.render();
  }
  return t.all_pass() ? 0 : 3;
}

std::size_t subgroup_arg(const GroupAnalysis& a, const std::string& text, const char* flag) {
  if (text.empty()) throw ValidationError(std::string(flag) + " is required");
  return a.subgroup_class(split_words(text));
}

int cmd_decompose(const Config& c, const std::string& subject) {
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  DecompositionReport r;
  if (subject == "jacobian") {
    r = decompose_jacobian(a);
  } else if (subject == "intermediate") {
    r = decompose_intermediate(a, subgroup_arg(a, c.h, "--H"));
  } else {
    r = decompose_prym(a, subgroup_arg(a, c.h, "--H"), subgroup_arg(a, c.n, "--N"));
  }
  std::cout << render_decomposition(a, r, format_of(c));
  return 0;
}

int cmd_classify(const Config& c) {
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  Verdict v = classify_factor(a, irrep_index(a, c.irrep), static_cast<std::size_t>(c.max_arity));
  std::cout << render_verdict(a, v, format_of(c));
  return 0;
}

int cmd_full_report(const Config& c) {
  auto job = load(c);
  const GroupAnalysis& a = *job.analysis;
  std::cout << render_full_report(a, full_report(a, static_cast<std::size_t>(c.max_arity)), format_of(c));
  return 0;
}

int cmd_verify(const Config& c) {
  Transcript t = verify_manifest(c.manifest, bounds_of(c));
  std::cout << render_transcript(t, format_of(c));
  return t.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Isotypical decompositions and group-algebra idempotents for finite groups"};
  app.require_subcommand(1);

  auto add_group = [&](CLI::App* sub, bool analysis) {
    sub->add_option("--group", cfg.group_path, "group file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-order", cfg.max_order, "group order bound");
    if (!analysis) return;
    sub->add_option("--table", cfg.table_path, "character table file (JSON); computed when absent")
        ->check(CLI::ExistingFile);
    sub->add_option("--assert-schur", cfg.schur, "Schur index assertion IRREP=m (repeatable)");
    sub->add_option("--max-lattice-order", cfg.max_lattice, "largest group order for the subgroup lattice");
    sub->add_option("--max-intersection-arity", cfg.max_arity, "largest number of N in an intersection")
        ->check(CLI::Range(2, 8));
  };
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* info = app.add_subcommand("group-info", "order, classes and subgroup classes");
  add_group(info, false);
  auto* table = app.add_subcommand("chartable", "character table and rational irreducibles");
  add_group(table, true);
  table->add_flag("--compute", cfg.compute, "ignore --table and compute the table");

  auto* idem = app.add_subcommand("idempotents", "central, subgroup and primitive idempotents");
  idem->require_subcommand(1);
  auto* central = idem->add_subcommand("central", "e_W and the e_V of its orbit");
  add_group(central, true);
  central->add_option("--irrep", cfg.irrep, "irreducible selector, e.g. 13-14 or deg4:K2")->required();
  auto* sub = idem->add_subcommand("subgroup", "f_H = p_H e_W");
  add_group(sub, true);
  sub->add_option("--irrep", cfg.irrep, "irreducible selector")->required();
  sub->add_option("--H", cfg.h, "comma separated generator words of H")->required();
  auto* prim = idem->add_subcommand("primitive", "u, k and f from a matrix representation");
  add_group(prim, true);
  prim->add_option("--rep", cfg.rep_path, "matrix representation file (JSON)")->required()->check(CLI::ExistingFile);

  auto* dec = app.add_subcommand("decompose", "isotypical decomposition of JW, JW_H or P(W_H/W_N)");
  dec->require_subcommand(1);
  auto* jac = dec->add_subcommand("jacobian", "JW");
  add_group(jac, true);
  auto* inter = dec->add_subcommand("intermediate", "JW_H");
  add_group(inter, true);
  inter->add_option("--H", cfg.h, "comma separated generator words of H")->required();
  auto* prym = dec->add_subcommand("prym", "P(W_H/W_N)");
  add_group(prym, true);
  prym->add_option("--H", cfg.h, "comma separated generator words of H")->required();
  prym->add_option("--N", cfg.n, "comma separated generator words of N")->required();

  auto* cls = app.add_subcommand("classify", "Prym, intersection or complement realization of one factor");
  add_group(cls, true);
  cls->add_option("--irrep", cfg.irrep, "irreducible selector")->required();

  auto* full = app.add_subcommand("full-report", "decomposition of JW with a realization for every factor");
  add_group(full, true);

  auto* verify = app.add_subcommand("verify", "check a fixture manifest");
  verify->add_option("manifest", cfg.manifest, "manifest file (JSON)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_group_info(cfg);
    if (*table) return cmd_chartable(cfg);
    if (*central) return cmd_central(cfg);
    if (*sub) return cmd_subgroup(cfg);
    if (*prim) return cmd_primitive(cfg);
    if (*jac) return cmd_decompose(cfg, "jacobian");
    if (*inter) return cmd_decompose(cfg, "intermediate");
    if (*prym) return cmd_decompose(cfg, "prym");
    if (*cls) return cmd_classify(cfg);
    if (*full) return cmd_full_report(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
