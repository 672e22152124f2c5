#include "test_support.hpp"

using namespace isotypic;
using namespace isotypic::testing;

namespace {

CycValue kv() {
  auto z = [](long k) { return CycValue::root_of_unity(20, k); };
  return z(1) + z(9) - z(13) - z(17);
}

const GroupAnalysis& appendix_a_loaded() {
  static const GroupAnalysis a = analysis_of("appendix_a", true);
  return a;
}

const GroupAnalysis& appendix_a_computed() {
  static const GroupAnalysis a = [] {
    auto src = load_source("appendix_a");
    AnalysisOptions opts;
    opts.schur = src.schur;
    return GroupAnalysis(src.group, std::nullopt, opts);
  }();
  return a;
}

std::size_t class_of_word(const FiniteGroup& g, const std::string& w) { return g.class_of(g.parse_element(w)); }

Subgroup subgroup_of(const FiniteGroup& g, const std::vector<std::string>& words) {
  return subgroup_from_words(g, words);
}

/// sign(p) and fixed-point count of a permutation given by its action.
struct PermData {
  int sign;
  int fixed;
};

PermData perm_data(const std::vector<std::uint32_t>& p) {
  int fixed = 0, sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == i) ++fixed;
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return {sign, fixed};
}

}  // namespace

TEST(CharacterTable, AppendixAComputedShape) {
  const auto& a = appendix_a_computed();
  const auto& t = a.table();
  ASSERT_EQ(t.size(), 14u);
  std::multiset<long> degrees;
  for (std::size_t i = 0; i < t.size(); ++i) degrees.insert(t.degree(i));
  EXPECT_EQ(degrees, (std::multiset<long>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 4, 4, 4, 4}));
  const auto& g = a.group();
  std::size_t cx = class_of_word(g, "x"), cx10 = class_of_word(g, "x^10"), cx19 = class_of_word(g, "x^19");
  int found = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.degree(i) != 4 || t.value(i, cx10) != CycValue(20, Rational(-4)).at_level(t.level())) continue;
    const CycValue v = t.value(i, cx);
    if (v == kv().at_level(t.level()) || v == (-kv()).at_level(t.level())) {
      ++found;
      EXPECT_EQ(t.value(i, cx19) * t.value(i, cx19), CycValue(t.level(), Rational(-5)));
    }
  }
  EXPECT_EQ(found, 2);
}

TEST(CharacterTable, ComputedMatchesPaperTableUpToRowOrder) {
  const auto& c = appendix_a_computed().table();
  const auto& p = appendix_a_loaded().table();
  std::vector<bool> used(c.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto hit = c.find(p.row(i));
    ASSERT_TRUE(hit.has_value()) << "paper row " << i + 1 << " missing";
    EXPECT_FALSE(used[*hit]);
    used[*hit] = true;
  }
}

TEST(CharacterTable, TrivialGroup) {
  auto t = compute_character_table(load_group_named("trivial"));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.degree(0), 1);
}

TEST(CharacterTable, S3AgainstPermutationCharacters) {
  auto g = load_group_named("s3");
  auto t = compute_character_table(g);
  ASSERT_EQ(t.size(), 3u);
  // Oracle: trivial, sign, and fixed-points minus one, from the natural action.
  const std::vector<std::vector<std::uint32_t>> gens{{1, 0, 2}, {1, 2, 0}};
  std::vector<std::vector<std::uint32_t>> act(g->order());
  act[0] = {0, 1, 2};
  for (Element e = 0; e < g->order(); ++e) {
    if (e == 0) continue;
    // label is a word in a, b; evaluate the permutation action left to right.
    std::vector<std::uint32_t> p{0, 1, 2};
    Word w = parse_word(g->label(e), g->generator_names());
    for (int letter : w) {
      const auto& s = gens[static_cast<std::size_t>(std::abs(letter) - 1)];
      std::vector<std::uint32_t> si(3);
      for (std::uint32_t i = 0; i < 3; ++i) si[s[i]] = i;
      const auto& use = letter > 0 ? s : si;
      std::vector<std::uint32_t> q(3);
      for (std::uint32_t i = 0; i < 3; ++i) q[i] = use[p[i]];
      p = q;
    }
    act[e] = p;
  }
  std::set<std::vector<long>> expected, got;
  std::vector<long> triv, sign, std2;
  for (const auto& c : g->classes()) {
    auto d = perm_data(act[c.representative]);
    triv.push_back(1);
    sign.push_back(d.sign);
    std2.push_back(d.fixed - 1);
  }
  expected = {triv, sign, std2};
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<long> row;
    for (const auto& v : t.row(i)) {
      EXPECT_TRUE(v.is_rational());
      row.push_back(to_long(v.rational_part()));
    }
    got.insert(row);
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(t.degree(0), 1);
  EXPECT_EQ(t.degree(2), 2);
}

TEST(CharacterTable, RowsSortedByDegreeThenValues) {
  for (const auto& name : corpus()) {
    auto t = compute_character_table(load_group_named(name));
    auto order = canonical_row_order(t);
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i) << name;
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LE(t.degree(i - 1), t.degree(i));
  }
}

TEST(CharacterTable, OrthogonalityAndDegrees) {
  for (const auto& name : corpus()) {
    auto g = load_group_named(name);
    auto t = compute_character_table(g);
    long sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t.degree(i) * t.degree(i);
      EXPECT_EQ(static_cast<long>(g->order()) % t.degree(i), 0);
      for (std::size_t j = 0; j < t.size(); ++j) {
        EXPECT_EQ(inner_product(*g, t.row(i), t.row(j)), CycValue(t.level(), Rational(i == j ? 1 : 0)));
      }
    }
    EXPECT_EQ(sum, static_cast<long>(g->order()));
    for (std::size_t a = 0; a < g->classes().size(); ++a) {
      for (std::size_t b = 0; b < g->classes().size(); ++b) {
        CycValue s(t.level());
        for (std::size_t i = 0; i < t.size(); ++i) s += t.value(i, a) * t.value(i, b).conj();
        Rational expect = a == b ? Rational(static_cast<long>(g->order()), static_cast<long>(g->classes()[a].members.size())) : Rational(0);
        expect.canonicalize();
        EXPECT_EQ(s, CycValue(t.level(), expect));
      }
    }
  }
}

TEST(CharacterTable, LoadValidatesAndRoundTrips) {
  auto g = load_group_named("appendix_a");
  json j = read_json_file(data_path("tables/appendix_a.json"));
  auto t = load_character_table(j, g);
  auto again = load_character_table(character_table_to_json(t), g);
  EXPECT_EQ(again.rows(), t.rows());
  EXPECT_EQ(character_table_to_json(again), character_table_to_json(t));
}

TEST(CharacterTable, PerturbedEntryRejectedWithWitness) {
  auto g = load_group_named("appendix_a");
  json j = read_json_file(data_path("tables/appendix_a.json"));
  j["characters"][5][3] = "2";
  try {
    load_character_table(j, g);
    FAIL() << "perturbed table accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("invalid character table"), std::string::npos);
  }
}

TEST(CharacterTable, BundledTablesMatchComputed) {
  for (const std::string name : {"s3", "s4", "q8", "sl23"}) {
    auto g = load_group_named(name);
    auto loaded = load_character_table(read_json_file(data_path("tables/" + name + ".json")), g);
    EXPECT_EQ(loaded.rows(), compute_character_table(g).rows()) << name;
  }
}

TEST(InnerProduct, Examples) {
  const auto& a = appendix_a_loaded();
  const auto& t = a.table();
  const auto& g = a.group();
  EXPECT_EQ(inner_product(g, t.row(12), t.row(12)), CycValue(t.level(), Rational(1)));
  EXPECT_EQ(inner_product(g, t.row(12), t.row(13)), CycValue(t.level()));
  auto s3 = load_group_named("s3");
  auto ts3 = compute_character_table(s3);
  EXPECT_EQ(fixed_dim(ts3, 0, subgroup_of(*s3, {"G"})), 1);
}

TEST(FixedDim, AppendixAMultiplicities) {
  const auto& a = appendix_a_loaded();
  const auto& g = a.group();
  EXPECT_EQ(fixed_dim(a.table(), 12, subgroup_of(g, {"1"})), 4);
  EXPECT_EQ(fixed_dim(a.table(), 12, subgroup_of(g, {"x^10"})), 0);
  EXPECT_EQ(fixed_dim(a.table(), 12, subgroup_of(g, {"x*y^2"})), 2);
}

TEST(FixedDim, BasicIdentities) {
  for (const auto& name : corpus()) {
    auto a = analysis_of(name);
    for (std::size_t s = 0; s < a.lattice().size(); ++s) {
      EXPECT_EQ(a.fixed(s, 0), 1);
      for (std::size_t chi = 0; chi < a.table().size(); ++chi) {
        // Oracle: direct character sum over the members of H.
        CycValue sum(a.table().level());
        for (auto h : a.lattice()[s].members) sum += a.table().at(chi, h);
        sum *= Rational(1, static_cast<long>(a.lattice()[s].order()));
        EXPECT_EQ(sum, CycValue(a.table().level(), Rational(a.fixed(s, chi))));
      }
    }
    for (std::size_t chi = 0; chi < a.table().size(); ++chi) EXPECT_EQ(a.fixed(0, chi), a.table().degree(chi));
  }
}

TEST(GaloisOrbits, AppendixAPaperList) {
  const auto& a = appendix_a_loaded();
  std::vector<std::vector<std::size_t>> orbits;
  for (const auto& w : a.irreps()) orbits.push_back(w.orbit);
  const std::vector<std::vector<std::size_t>> expected{{0}, {1}, {2}, {3}, {4, 5}, {6, 7}, {8, 9}, {10}, {11}, {12, 13}};
  EXPECT_EQ(orbits, expected);
  EXPECT_EQ(a.irreps().size(), rational_fusion_classes(a.group()).size());
  const auto& w = a.irreps()[9];
  EXPECT_EQ(w.label(), "2(V13+V14)");
  EXPECT_EQ(w.schur.m, 2);
  auto chi_w = rational_character(a.table(), w);
  EXPECT_EQ(chi_w[0], Rational(16));
}

TEST(GaloisOrbits, RationalGroupsAndTrivial) {
  auto s4 = analysis_of("s4");
  for (const auto& w : s4.irreps()) EXPECT_EQ(w.orbit.size(), 1u);
  auto triv = analysis_of("trivial");
  ASSERT_EQ(triv.irreps().size(), 1u);
  EXPECT_EQ(triv.irreps()[0].schur.m, 1);
  EXPECT_EQ(triv.irreps()[0].schur.kind, SchurStatus::Kind::exact);
}

TEST(GaloisOrbits, OrbitCountEqualsFusionClassCount) {
  for (const auto& name : corpus()) {
    auto a = analysis_of(name);
    EXPECT_EQ(a.irreps().size(), rational_fusion_classes(a.group()).size()) << name;
    for (const auto& w : a.irreps()) {
      // Orbit size is the index of the stabilizer in the unit group.
      EXPECT_EQ(w.orbit.size() * w.stabilizer.size(), unit_group(a.table().level()).size());
    }
  }
}

TEST(RationalCharacter, Q8QuaternionIrrep) {
  auto a = analysis_of("q8");
  const auto& w = a.irreps()[a.find_irrep(parse_irrep_selector("deg2"))];
  EXPECT_EQ(w.schur.m, 2);
  EXPECT_EQ(rational_character(a.table(), w)[0], Rational(4));
  auto triv = rational_character(a.table(), a.irreps()[0]);
  for (const auto& v : triv) EXPECT_EQ(v, Rational(1));
}

TEST(RhoDecomposition, Examples) {
  const auto& a = appendix_a_loaded();
  const std::size_t top = a.lattice().size() - 1;
  for (std::size_t j = 0; j < a.irreps().size(); ++j) EXPECT_EQ(a.rho(top)[j], j == 0 ? 1 : 0);
  EXPECT_EQ(a.rho(0)[9], 2);

  auto b = analysis_of("appendix_b");
  const std::size_t w = b.find_irrep(parse_irrep_selector("deg2:K1"));
  const std::size_t h = b.subgroup_class({"x^2"});
  std::vector<long> diff(b.irreps().size());
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = b.rho(0)[j] - b.rho(h)[j];
  EXPECT_EQ(diff[w], 1);
  std::vector<long> others;
  for (std::size_t j = 0; j < diff.size(); ++j) {
    if (j != w && diff[j] != 0) others.push_back(diff[j]);
  }
  EXPECT_EQ(others, std::vector<long>{2});
}

TEST(RhoDecomposition, DimensionCount) {
  for (const auto& name : corpus()) {
    auto a = analysis_of(name);
    for (std::size_t s = 0; s < a.lattice().size(); ++s) {
      long dim = 0;
      for (std::size_t j = 0; j < a.irreps().size(); ++j) dim += a.rho(s)[j] * a.irreps()[j].rational_dimension();
      EXPECT_EQ(dim, static_cast<long>(a.group().order() / a.lattice()[s].order())) << name << " S" << s + 1;
    }
  }
}

TEST(SchurBound, Examples) {
  auto b = analysis_of("appendix_b");
  const auto& wb = b.irreps()[b.find_irrep(parse_irrep_selector("deg2:K1"))];
  EXPECT_EQ(schur_divisor_bound(b.table(), wb, b.lattice()), 2);
  const auto& a = appendix_a_loaded();
  // Oracle: gcd of the direct character sums over every subgroup class.
  long g = 0;
  for (std::size_t s = 0; s < a.lattice().size(); ++s) {
    CycValue sum(a.table().level());
    for (auto h : a.lattice()[s].members) sum += a.table().at(12, h);
    sum *= Rational(1, static_cast<long>(a.lattice()[s].order()));
    g = std::gcd(g, to_long(sum.rational_part()));
  }
  EXPECT_EQ(g, 2);
  EXPECT_EQ(schur_divisor_bound(a.table(), a.irreps()[9], a.lattice()), g);
  auto s3 = analysis_of("s3");
  for (const auto& w : s3.irreps()) EXPECT_EQ(w.schur.kind, SchurStatus::Kind::exact);
}

TEST(SchurBound, UndeclaredIsBoundedAndConditional) {
  auto src = load_source("q8");
  GroupAnalysis a(src.group);
  const auto& w = a.irreps()[a.find_irrep(parse_irrep_selector("deg2"))];
  EXPECT_EQ(w.schur.kind, SchurStatus::Kind::bounded);
  EXPECT_EQ(w.schur.divisor_bound, 2);
  EXPECT_TRUE(a.any_conditional());
}

TEST(SchurBound, InconsistentAssertionRejected) {
  auto src = load_source("q8");
  AnalysisOptions opts;
  opts.schur.push_back({parse_irrep_selector("deg2"), 4, "", true});
  EXPECT_THROW(GroupAnalysis(src.group, std::nullopt, opts), InvariantError);
  AnalysisOptions exact;
  exact.schur.push_back({parse_irrep_selector("1"), 2, "", true});
  EXPECT_THROW(GroupAnalysis(src.group, std::nullopt, exact), InvariantError);
}
