#include "test_support.hpp"

using namespace isotypic;
using namespace isotypic::testing;

namespace {

std::vector<Word> words(const std::vector<std::string>& rels, const std::vector<std::string>& names) {
  std::vector<Word> out;
  for (const auto& r : rels) out.push_back(parse_word(r, names));
  return out;
}

void expect_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    ASSERT_EQ(g.mul(0, a), a);
    ASSERT_EQ(g.mul(a, 0), a);
    ASSERT_EQ(g.mul(a, g.inv(a)), 0u);
    ASSERT_EQ(g.mul(g.inv(a), a), 0u);
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
  EXPECT_EQ(g.element_order(0), 1u);
  EXPECT_EQ(n % g.exponent(), 0u);
}

}  // namespace

TEST(Presentation, AppendixAOrder80With14Classes) {
  std::vector<std::string> n{"x", "y"};
  auto g = FiniteGroup::from_presentation(2, words({"x^20", "y^8", "x^10*y^4", "y^-1*x*y*x^-3"}, n), n);
  EXPECT_EQ(g->order(), 80u);
  EXPECT_EQ(g->classes().size(), 14u);
  EXPECT_EQ(g->exponent(), 40u);
}

TEST(Presentation, TrivialGroup) {
  auto g = FiniteGroup::from_presentation(1, {Word{1}}, {"x"});
  EXPECT_EQ(g->order(), 1u);
}

TEST(Presentation, AppendixBOrder24WithQuaternionSubgroup) {
  auto g = load_group_named("appendix_b");
  ASSERT_EQ(g->order(), 24u);
  Element x = g->parse_element("x"), y = g->parse_element("y");
  EXPECT_EQ(oracle_closure(*g, {x, y}).size(), 8u);
  EXPECT_EQ(g->power(x, 2), g->power(y, 2));
}

TEST(Presentation, EmptyRelatorsRejected) {
  EXPECT_THROW(FiniteGroup::from_presentation(1, {}, {"x"}), ResourceError);
}

TEST(Presentation, InfiniteGroupHitsBound) {
  Bounds b;
  b.max_group_order = 100;
  std::vector<std::string> n{"x", "y"};
  EXPECT_THROW(FiniteGroup::from_presentation(2, words({"x^2", "y^2"}, n), n, b), ResourceError);
}

TEST(Permutations, SmallGroups) {
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(s3->order(), 6u);
  auto c4 = FiniteGroup::from_permutations({{1, 2, 3, 0}});
  EXPECT_EQ(c4->order(), 4u);
  EXPECT_TRUE(c4->is_abelian());
  auto s4 = load_group_named("s4");
  EXPECT_EQ(s4->order(), 24u);
  EXPECT_EQ(s4->classes().size(), 5u);
}

TEST(Permutations, RejectsNonPermutation) {
  EXPECT_THROW(FiniteGroup::from_permutations({{0, 0, 1}}), ValidationError);
}

TEST(CayleyTable, Z2IsValid) {
  auto g = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g->order(), 2u);
}

TEST(CayleyTable, BrokenAssociativityNamesWitness) {
  // Latin square with identity 0 that is not associative.
  std::vector<std::vector<Element>> t{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_cayley_table(t);
    FAIL() << "accepted a non-associative table";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not a group table"), std::string::npos);
  }
}

TEST(CayleyTable, RoundTripOfOrder80) {
  auto g = load_group_named("appendix_a");
  auto h = FiniteGroup::from_cayley_table(g->cayley_table());
  ASSERT_EQ(h->order(), g->order());
  for (Element a = 0; a < g->order(); ++a) {
    for (Element b = 0; b < g->order(); ++b) ASSERT_EQ(h->mul(a, b), g->mul(a, b));
  }
  EXPECT_EQ(h->classes().size(), 14u);
}

TEST(Classes, OrderedPartitionWithLeastRepresentative) {
  for (const auto& name : corpus()) {
    auto g = load_group_named(name);
    std::size_t total = 0;
    std::uint32_t last_order = 0;
    Element last_rep = 0;
    for (std::size_t i = 0; i < g->classes().size(); ++i) {
      const auto& c = g->classes()[i];
      total += c.members.size();
      EXPECT_EQ(g->order() % c.members.size(), 0u);
      EXPECT_EQ(c.representative, c.members.front());
      for (auto m : c.members) EXPECT_EQ(g->class_of(m), i);
      const auto o = g->element_order(c.representative);
      if (i > 0) EXPECT_TRUE(o > last_order || (o == last_order && c.representative > last_rep));
      last_order = o;
      last_rep = c.representative;
    }
    EXPECT_EQ(total, g->order()) << name;
  }
}

TEST(Classes, MatchBruteForceConjugation) {
  for (const auto& name : corpus()) {
    auto g = load_group_named(name);
    std::multiset<std::size_t> sizes;
    for (const auto& c : g->classes()) sizes.insert(c.members.size());
    EXPECT_EQ(sizes, oracle_class_sizes(*g)) << name;
  }
  auto s4 = load_group_named("s4");
  std::multiset<std::size_t> expected{1, 6, 3, 8, 6};
  EXPECT_EQ(oracle_class_sizes(*s4), expected);
}

TEST(Classes, AbelianGroupHasSingletonClasses) {
  auto g = load_group_named("z5");
  for (const auto& c : g->classes()) EXPECT_EQ(c.members.size(), 1u);
}

TEST(Lattice, AppendixAContainsThePaperSubgroups) {
  auto g = load_group_named("appendix_a");
  SubgroupLattice lat(g);
  const std::vector<std::vector<std::string>> listed{
      {"x^2", "x*y"}, {"x^2", "y"}, {"y^2", "x"}, {"x^2", "x*y^2"}, {"x"},
      {"x^4", "x*y^2"}, {"x^3*y^2", "x*y"}, {"x*y"}, {"x*y^2"}, {"x*y^2", "x^10"}};
  std::set<std::size_t> classes;
  for (const auto& gens : listed) {
    std::vector<Element> els;
    for (const auto& w : gens) els.push_back(g->parse_element(w));
    Subgroup h = subgroup_generated(*g, els);
    EXPECT_EQ(h.members.size(), oracle_closure(*g, els).size());
    classes.insert(lat.class_of(h));
  }
  EXPECT_EQ(classes.size(), listed.size());
}

TEST(Lattice, TrivialGroupHasOneSubgroup) {
  SubgroupLattice lat(load_group_named("trivial"));
  EXPECT_EQ(lat.size(), 1u);
}

TEST(Lattice, ClassCountsMatchBruteForce) {
  // Every subgroup in this corpus is generated by two elements.
  for (const auto& name : corpus()) {
    auto g = load_group_named(name);
    SubgroupLattice lat(g);
    EXPECT_EQ(lat.size(), oracle_two_generated_subgroup_classes(*g)) << name;
  }
  EXPECT_EQ(SubgroupLattice(load_group_named("q8")).size(), 6u);
}

TEST(Lattice, ClosedUnderConjugationAndLagrange) {
  for (const auto& name : corpus()) {
    auto g = load_group_named(name);
    SubgroupLattice lat(g);
    EXPECT_EQ(lat[0].order(), 1u);
    EXPECT_EQ(lat[lat.size() - 1].order(), g->order());
    for (std::size_t s = 0; s < lat.size(); ++s) {
      const Subgroup& h = lat[s];
      EXPECT_TRUE(h.canonical);
      EXPECT_EQ(g->order() % h.order(), 0u);
      for (auto a : h.members) {
        EXPECT_TRUE(h.contains(g->inv(a)));
        for (auto b : h.members) EXPECT_TRUE(h.contains(g->mul(a, b)));
      }
      for (Element c = 0; c < g->order(); ++c) {
        Subgroup conj = conjugate_subgroup(*g, h, c);
        EXPECT_EQ(lat.class_of(conj), s);
        EXPECT_LE(h.members, conj.members);
      }
    }
  }
}

TEST(SubgroupGenerated, CentralInvolutionAndJoins) {
  auto g = load_group_named("appendix_a");
  Element x = g->parse_element("x"), y = g->parse_element("y");
  Subgroup z = subgroup_generated(*g, {g->power(x, 10)});
  EXPECT_EQ(z.order(), 2u);
  for (Element c = 0; c < g->order(); ++c) EXPECT_EQ(g->conjugate(g->power(x, 10), c), g->power(x, 10));
  Subgroup hx = subgroup_generated(*g, {x});
  EXPECT_EQ(join(*g, hx, hx), hx);
  EXPECT_EQ(join(*g, hx, subgroup_generated(*g, {y})).order(), 80u);
}

TEST(Fusion, ExamplesAndCount) {
  EXPECT_EQ(rational_fusion_classes(*load_group_named("z5")).size(), 2u);
  EXPECT_EQ(rational_fusion_classes(*load_group_named("trivial")).size(), 1u);
  auto s4 = load_group_named("s4");
  EXPECT_EQ(rational_fusion_classes(*s4).size(), s4->classes().size());
}

TEST(GroupAxioms, EveryIngestionPath) {
  for (const auto& name : corpus()) expect_group_axioms(*load_group_named(name));
  expect_group_axioms(*load_group_named("appendix_b"));
}

TEST(Words, ParseAndEvaluate) {
  auto g = load_group_named("appendix_a");
  EXPECT_EQ(g->parse_element("x^20"), 0u);
  EXPECT_EQ(g->parse_element("x^-1*x"), 0u);
  EXPECT_EQ(g->parse_element("y^-1*x*y"), g->parse_element("x^3"));
  EXPECT_THROW(g->parse_element("q"), ValidationError);
  for (Element a = 0; a < g->order(); ++a) EXPECT_EQ(g->parse_element(g->label(a)), a);
}
