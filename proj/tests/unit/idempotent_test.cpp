#include "test_support.hpp"

using namespace isotypic;
using namespace isotypic::testing;

namespace {

struct AppendixA {
  GroupAnalysis a = analysis_of("appendix_a", true);
  RepSource rep = load_rep(read_json_file(data_path("reps/appendix_a.json")), a.table());
  json fixture = read_json_file(data_path("fixtures/appendix_a_corrected.json"));

  LElement printed(const std::string& name) const {
    return load_algebra_element(fixture.at("elements").at(name), a.group_ptr(), rep.rep.field(), &rep.embedding);
  }
  LElement to_l(const QElement& q) const { return embed_rational(q, rep.rep.field()); }
};

const AppendixA& appendix_a() {
  static const AppendixA data;
  return data;
}

QElement one(const GroupPtr& g) { return QElement::basis(g, 0, Rational(1)); }

Subgroup sub(const FiniteGroup& g, const std::vector<std::string>& words) { return subgroup_from_words(g, words); }

/// Sign representation of S3 over Q.
MatrixRep sign_rep(const GroupPtr& g) {
  auto q = NumField::rationals();
  auto m = [&](long v) { return MatrixRep::Matrix{{NumFieldValue(q, Rational(v))}}; };
  return MatrixRep(g, q, {m(-1), m(1)});
}

}  // namespace

TEST(Algebra, ProjectorIsIdempotentForEverySubgroup) {
  for (const auto& name : corpus()) {
    auto a = analysis_of(name);
    for (const auto& h : a.lattice().classes()) {
      QElement p = projector_pH(a.group_ptr(), h);
      EXPECT_TRUE(is_idempotent(p));
      for (auto x : h.members) {
        EXPECT_EQ(p.left_translate(x), p);
        EXPECT_EQ(p.right_translate(x), p);
      }
    }
  }
}

TEST(Algebra, ProductAgreesWithCayleyOracle) {
  auto g = load_group_named("sl23");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    QElement a = random_q_element(g, rng), b = random_q_element(g, rng);
    EXPECT_EQ((a * b).coeffs(), oracle_mul(*g, a.coeffs(), b.coeffs()));
  }
}

TEST(Algebra, CentralInvolutionSplitting) {
  auto a = analysis_of("q8");
  const auto& g = a.group();
  Element zc = g.classes()[1].representative;
  ASSERT_EQ(g.element_order(zc), 2u);
  QElement z = QElement::basis(a.group_ptr(), zc, Rational(1));
  QElement e = one(a.group_ptr()) - z, f = one(a.group_ptr()) + z;
  e.scale_rational(ratio(1, 2));
  f.scale_rational(ratio(1, 2));
  EXPECT_TRUE((e * f).is_zero());
  EXPECT_TRUE(is_idempotent(e));
}

TEST(CentralIdempotents, AppendixAPrintedEVAndEW) {
  const auto& d = appendix_a();
  LElement ev = embed_values(central_idempotent_eV(d.a.table(), d.rep.character), d.rep.embedding);
  EXPECT_EQ(ev, d.printed("eV"));
  QElement ew = central_idempotent_eW(d.a.table(), d.a.irreps()[9]);
  EXPECT_EQ(d.to_l(ew), d.printed("eW"));
  EXPECT_TRUE(is_central(ew));
}

TEST(CentralIdempotents, AppendixBPrintedEW) {
  auto b = analysis_of("appendix_b");
  json j = read_json_file(data_path("fixtures/appendix_b.json"));
  LElement printed = load_algebra_element(j.at("elements").at("eW"), b.group_ptr(), NumField::rationals());
  QElement ew = central_idempotent_eW(b.table(), b.irreps()[b.find_irrep(parse_irrep_selector("deg2:K1"))]);
  EXPECT_EQ(embed_rational(ew, NumField::rationals()), printed);
}

TEST(CentralIdempotents, TrivialCharacterAveragesTheGroup) {
  auto a = analysis_of("a4");
  CycElement e = central_idempotent_eV(a.table(), 0);
  for (Element x = 0; x < a.group().order(); ++x) {
    EXPECT_EQ(e[x], CycValue(a.table().level(), Rational(1, 12)));
  }
  EXPECT_EQ(central_idempotent_eW(a.table(), a.irreps()[0]), projector_pH(a.group_ptr(), a.lattice()[a.lattice().size() - 1]));
}

TEST(CentralIdempotents, Q8QuaternionBlock) {
  auto a = analysis_of("q8");
  std::size_t chi = a.irreps()[a.find_irrep(parse_irrep_selector("deg2"))].orbit[0];
  CycElement e = central_idempotent_eV(a.table(), chi);
  Element zc = a.group().classes()[1].representative;
  for (Element x = 0; x < a.group().order(); ++x) {
    Rational expect = x == 0 ? ratio(1, 2) : x == zc ? ratio(-1, 2) : Rational(0);
    EXPECT_EQ(e[x], CycValue(a.table().level(), expect));
  }
}

TEST(CentralIdempotents, OrbitConjugatesAreOrthogonal) {
  const auto& d = appendix_a();
  CycElement e13 = central_idempotent_eV(d.a.table(), 12), e14 = central_idempotent_eV(d.a.table(), 13);
  EXPECT_TRUE(are_orthogonal(e13, e14));
  CycElement s = e13 + e14;
  QElement ew = central_idempotent_eW(d.a.table(), d.a.irreps()[9]);
  EXPECT_EQ(s, ew.map(CycValue(s.zero().level()), [&](const Rational& q) { return CycValue(s.zero().level(), q); }));
}

TEST(SubgroupIdempotents, AppendixAPrintedFH) {
  const auto& d = appendix_a();
  const auto& g = d.a.group();
  QElement ew = central_idempotent_eW(d.a.table(), d.a.irreps()[9]);
  QElement fh = subgroup_idempotent_fH(d.a.group_ptr(), sub(g, {"x*y^2"}), ew);
  EXPECT_EQ(d.to_l(fh), d.printed("pHeW"));
  EXPECT_TRUE(is_idempotent(fh));
  EXPECT_TRUE(subgroup_idempotent_fH(d.a.group_ptr(), sub(g, {"x^10"}), ew).is_zero());
  // dim V^H * n * [K:Q] = 2 * 4 * 2.
  EXPECT_EQ(ideal_dim(fh), 16u);
}

TEST(SubgroupIdempotents, S3IdealDimensionWithOracle) {
  auto a = analysis_of("s3");
  QElement ew = central_idempotent_eW(a.table(), a.irreps()[2]);
  QElement fh = subgroup_idempotent_fH(a.group_ptr(), sub(a.group(), {"a"}), ew);
  EXPECT_EQ(oracle_ideal_dim(a.group(), fh.coeffs()), 2u);
  EXPECT_EQ(ideal_dim(fh), 2u);
}

TEST(SubgroupIdempotents, ZeroIffNoFixedVectors) {
  for (const auto& name : corpus()) {
    auto a = analysis_of(name);
    for (std::size_t w = 0; w < a.irreps().size(); ++w) {
      const auto& irr = a.irreps()[w];
      QElement ew = central_idempotent_eW(a.table(), irr);
      for (std::size_t s = 0; s < a.lattice().size(); ++s) {
        QElement fh = subgroup_idempotent_fH(a.group_ptr(), a.lattice()[s], ew);
        const long fixed = a.fixed(s, irr.orbit[0]);
        EXPECT_EQ(fh.is_zero(), fixed == 0);
        EXPECT_EQ(oracle_ideal_dim(a.group(), fh.coeffs()),
                  static_cast<std::size_t>(fixed * irr.degree * static_cast<long>(irr.orbit.size())))
            << name << " " << irr.label() << " S" << s + 1;
      }
    }
  }
}

TEST(Ell, OneDimensionalRepGivesEV) {
  auto a = analysis_of("s3");
  MatrixRep rep = sign_rep(a.group_ptr());
  LElement ell = ell_from_representation(rep, 0);
  QElement ev = central_idempotent_eW(a.table(), a.irreps()[1]);
  EXPECT_EQ(ell, embed_rational(ev, NumField::rationals()));
}

TEST(Ell, S3StandardRep) {
  auto a = analysis_of("s3");
  RepSource rep = load_rep(read_json_file(data_path("reps/s3.json")), a.table());
  LElement l1 = ell_from_representation(rep.rep, 0), l2 = ell_from_representation(rep.rep, 1);
  EXPECT_TRUE(are_orthogonal(l1, l2));
  EXPECT_TRUE(is_idempotent(l1));
  EXPECT_EQ(l1 + l2, embed_rational(central_idempotent_eW(a.table(), a.irreps()[2]), NumField::rationals()));
}

TEST(Ell, AppendixAMatchesCorrectedPrint) {
  const auto& d = appendix_a();
  LElement l1 = ell_from_representation(d.rep.rep, 0);
  EXPECT_EQ(l1, d.printed("l1"));
  EXPECT_EQ(ideal_dim(l1), 4u);
  const auto& f = d.rep.rep.field();
  NumFieldValue c = l1[d.a.group().parse_element("x^12*y^2")];
  EXPECT_EQ(c, NumFieldValue(f, ratio(1, 10)));
}

TEST(OrbitModule, AppendixAEll) {
  const auto& d = appendix_a();
  LElement l1 = ell_from_representation(d.rep.rep, 0);
  auto check = orbit_module_check(l1, 4);
  EXPECT_TRUE(check.stabilizer_trivial);
  EXPECT_TRUE(check.direct);
  EXPECT_EQ(check.dim, 8u);
  EXPECT_TRUE(check.ok());
  auto tau = *d.rep.rep.field()->find_automorphism("tau");
  EXPECT_EQ(compare_orbit_modules(l1, apply_automorphism(l1, tau)), ModuleRelation::equal);
  LElement l2 = ell_from_representation(d.rep.rep, 1);
  EXPECT_NE(compare_orbit_modules(l1, l2), ModuleRelation::other);
}

TEST(OrbitModule, RationalFieldGivesDimN) {
  auto a = analysis_of("s3");
  RepSource rep = load_rep(read_json_file(data_path("reps/s3.json")), a.table());
  auto check = orbit_module_check(ell_from_representation(rep.rep, 0), 2);
  EXPECT_TRUE(check.ok());
  EXPECT_EQ(check.dim, 2u);
}

TEST(PrimitiveSystem, S3) {
  auto a = analysis_of("s3");
  RepSource rep = load_rep(read_json_file(data_path("reps/s3.json")), a.table());
  const auto& irr = a.irreps()[2];
  auto sys = build_idempotent_system(rep.rep, embed_values(central_idempotent_eV(a.table(), 2), rep.embedding),
                                     central_idempotent_eW(a.table(), irr));
  EXPECT_EQ(sys.m, 1u);
  ASSERT_EQ(sys.f.size(), 2u);
  for (std::size_t s = 0; s < 2; ++s) {
    EXPECT_EQ(sys.k[s], sys.u[s][0]);
    EXPECT_EQ(embed_rational(sys.f[s], NumField::rationals()), sys.k[s]);
    EXPECT_EQ(oracle_ideal_dim(a.group(), sys.f[s].coeffs()), 2u);
  }
  auto t = verify_system(sys);
  EXPECT_TRUE(t.all_pass()) << t.render();
}

TEST(PrimitiveSystem, TrivialOneDimensional) {
  auto a = analysis_of("s3");
  MatrixRep rep = sign_rep(a.group_ptr());
  QElement ew = central_idempotent_eW(a.table(), a.irreps()[1]);
  auto sys = build_idempotent_system(rep, embed_rational(ew, NumField::rationals()), ew);
  ASSERT_EQ(sys.k.size(), 1u);
  EXPECT_EQ(sys.f[0], ew);
  EXPECT_TRUE(verify_system(sys).all_pass());
}

TEST(PrimitiveSystem, Q8OverGaussianField) {
  auto a = analysis_of("q8");
  RepSource rep = load_rep(read_json_file(data_path("reps/q8.json")), a.table());
  auto ev = embed_values(central_idempotent_eV(a.table(), rep.character), rep.embedding);
  auto sys = build_idempotent_system(rep.rep, ev, central_idempotent_eW(a.table(), a.irreps()[a.irrep_of_character(rep.character)]));
  EXPECT_EQ(sys.m, 2u);
  ASSERT_EQ(sys.k.size(), 1u);
  EXPECT_EQ(sys.k[0], ev);
  auto t = verify_system(sys);
  EXPECT_TRUE(t.all_pass()) << t.render();
}

TEST(PrimitiveSystem, RejectsWrongSchurData) {
  // The standard S3 rep written over Q(i): [L:K] = 2 but the rep is already rational.
  auto a = analysis_of("s3");
  json j = read_json_file(data_path("reps/s3.json"));
  j["field"] = read_json_file(data_path("reps/q8.json")).at("field");
  RepSource rep = load_rep(j, a.table());
  auto ev = embed_values(central_idempotent_eV(a.table(), rep.character), rep.embedding);
  bool rejected = false;
  try {
    auto sys = build_idempotent_system(rep.rep, ev, central_idempotent_eW(a.table(), a.irreps()[2]));
    rejected = !verify_system(sys).all_pass();
  } catch (const InvariantError&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
}

TEST(PrintedFixtures, CorrectedIdempotentsOfAppendixA) {
  const auto& d = appendix_a();
  LElement k1 = d.printed("k1"), ev = d.printed("eV");
  LElement k2 = ev - k1;
  EXPECT_TRUE(is_idempotent(k1));
  EXPECT_TRUE(are_orthogonal(k1, k2));
  auto tau = *d.rep.rep.field()->find_automorphism("tau");
  EXPECT_EQ(apply_automorphism(k1, tau), k1);
  auto q = to_rational(d.printed("f1"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(oracle_ideal_dim(d.a.group(), q->coeffs()), 16u);
}

TEST(IdealDim, BasicValues) {
  auto a = analysis_of("sl23");
  EXPECT_EQ(ideal_dim(one(a.group_ptr())), a.group().order());
  for (std::size_t chi = 0; chi < a.table().size(); ++chi) {
    auto ev = central_idempotent_eV(a.table(), chi);
    EXPECT_EQ(ideal_dim(ev), static_cast<std::size_t>(a.table().degree(chi) * a.table().degree(chi)));
  }
}
