#include "test_support.hpp"

using namespace isotypic;
using namespace isotypic::testing;

namespace {

CycValue z(int level, long k) { return CycValue::root_of_unity(level, k); }

CycValue k_value() { return z(20, 1) + z(20, 9) - z(20, 13) - z(20, 17); }

NumFieldPtr field_l() { return load_field(read_json_file(data_path("reps/appendix_a.json")).at("field")); }

NumFieldValue named(const NumFieldPtr& f, const std::string& n) { return NumFieldValue(f, f->names().at(n)); }

CycValue random_cyc(int level, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(level)));
  for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) + 4) % 3);
  for (auto& x : c) x.canonicalize();
  return CycValue(level, c);
}

NumFieldValue random_l(const NumFieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c(f->degree());
  for (auto& x : c) x = ratio(d(rng), 1 + (d(rng) + 5) % 4);
  return NumFieldValue(f, QPoly(c));
}

}  // namespace

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(z(4, 1) * z(4, 1), CycValue(4, Rational(-1)));
  EXPECT_EQ(k_value() * k_value(), CycValue(20, Rational(-5)));
  CycValue one(3, Rational(1));
  EXPECT_EQ((one + z(3, 1)) * (one + z(3, 2)), one);
}

TEST(Cyclotomic, GaloisExamples) {
  EXPECT_EQ(z(4, 1).conj(), -z(4, 1));
  // phi: k -> -k is realized by any unit outside the stabilizer of k.
  auto stab = char_field_stabilizer({k_value()}, 20);
  for (long u : unit_group(20)) {
    bool in = std::find(stab.begin(), stab.end(), u) != stab.end();
    EXPECT_EQ(k_value().galois(u), in ? k_value() : -k_value());
  }
  EXPECT_THROW(z(4, 1).galois(2), ValidationError);
}

TEST(Cyclotomic, StabilizerExamples) {
  EXPECT_EQ(char_field_stabilizer({CycValue(12, Rational(3))}, 12), unit_group(12));
  EXPECT_EQ(char_field_stabilizer({k_value()}, 20).size(), unit_group(20).size() / 2);
  // Faithful character of Z/5 takes every primitive fifth root; direct orbit check.
  auto stab = char_field_stabilizer({z(5, 1), z(5, 2), z(5, 3), z(5, 4)}, 5);
  EXPECT_EQ(stab, std::vector<long>{1});
}

TEST(Cyclotomic, TraceExamples) {
  auto stab_i = char_field_stabilizer({z(4, 1)}, 4);
  EXPECT_EQ(trace_to_rational(z(4, 1), stab_i), Rational(0));
  auto stab_k = char_field_stabilizer({k_value()}, 20);
  EXPECT_EQ(trace_to_rational(CycValue(20, Rational(4)), stab_k), Rational(8));
  EXPECT_EQ(trace_to_rational(k_value(), stab_k), Rational(0));
  EXPECT_THROW(trace_to_rational(z(5, 1), unit_group(5)), ValidationError);
}

TEST(Cyclotomic, CanonicalFormIsUnique) {
  // zeta_3^2 written two ways.
  EXPECT_EQ(z(3, 2), CycValue(3, Rational(-1)) - z(3, 1));
  EXPECT_EQ(z(6, 2), z(3, 1).at_level(6));
  EXPECT_EQ(z(6, 1) * z(6, 5), CycValue(6, Rational(1)));
}

TEST(CyclotomicProperty, FieldAxiomsAndHomomorphisms) {
  std::mt19937 rng(7);
  for (int level : {3, 4, 5, 8, 12, 20}) {
    auto units = unit_group(level);
    for (int trial = 0; trial < 25; ++trial) {
      CycValue a = random_cyc(level, rng), b = random_cyc(level, rng), c = random_cyc(level, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycValue(level, Rational(1)));
      long j = units[rng() % units.size()], k = units[rng() % units.size()];
      EXPECT_EQ((a * b).galois(j), a.galois(j) * b.galois(j));
      EXPECT_EQ((a + b).galois(j), a.galois(j) + b.galois(j));
      EXPECT_EQ(a.galois(k).galois(j), a.galois((j * k) % level));
      Rational t = trace_to_rational(a + b, {1});
      EXPECT_EQ(t, trace_to_rational(a, {1}) + trace_to_rational(b, {1}));
      EXPECT_EQ(trace_to_rational(a * Rational(3), {1}), 3 * trace_to_rational(a, {1}));
    }
  }
}

TEST(CyclotomicProperty, TracesAreFullyStable) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    CycValue a = random_cyc(12, rng);
    CycValue t(12, trace_to_rational(a, {1}));
    EXPECT_EQ(char_field_stabilizer({t}, 12), unit_group(12));
  }
}

TEST(NumberField, AppendixAFieldAndNames) {
  auto f = field_l();
  EXPECT_EQ(f->degree(), 4u);
  auto k = named(f, "k"), l = named(f, "l");
  EXPECT_EQ(k * k, NumFieldValue(f, Rational(-5)));
  EXPECT_EQ(l * l, NumFieldValue(f, Rational(-2)));
  // Fixers {id, tau} fix k and move l; phi negates k.
  auto tau = *f->find_automorphism("tau"), phi = *f->find_automorphism("phi");
  EXPECT_EQ(k.apply(tau), k);
  EXPECT_EQ(l.apply(tau), -l);
  EXPECT_EQ(k.apply(phi), -k);
  EXPECT_EQ(f->relative_degree(), 2u);
}

TEST(NumberField, CubeRootOfUnityField) {
  NumField::Spec s;
  s.minpoly = parse_polynomial("t^2 + t + 1");
  s.automorphisms = {parse_polynomial("t"), parse_polynomial("-1 - t")};
  s.subfield_fixers = {0};
  auto f = NumField::create(s);
  NumFieldValue w(f, parse_polynomial("t"));
  EXPECT_EQ(w * w * w, NumFieldValue(f, Rational(1)));
  EXPECT_EQ(w.apply(1), w * w);
}

TEST(NumberField, InverseOfSqrt2) {
  NumField::Spec s;
  s.minpoly = parse_polynomial("t^2 - 2");
  s.automorphisms = {parse_polynomial("t"), parse_polynomial("-t")};
  s.subfield_fixers = {0};
  auto f = NumField::create(s);
  EXPECT_EQ(NumFieldValue(f, parse_polynomial("t")).inverse(), NumFieldValue(f, parse_polynomial("t/2")));
}

TEST(NumberField, RejectsBadDeclarations) {
  NumField::Spec reducible;
  reducible.minpoly = parse_polynomial("t^2 - 4");
  reducible.automorphisms = {parse_polynomial("t"), parse_polynomial("-t")};
  reducible.subfield_fixers = {0};
  try {
    NumField::create(reducible);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not a field"), std::string::npos);
  }
  NumField::Spec wrong;
  wrong.minpoly = parse_polynomial("t^3 - 2");
  wrong.automorphisms = {parse_polynomial("t"), parse_polynomial("-t"), parse_polynomial("2*t")};
  wrong.subfield_fixers = {0};
  try {
    NumField::create(wrong);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not Galois"), std::string::npos);
  }
}

TEST(NumberFieldProperty, FieldAxiomsAndAutomorphisms) {
  auto f = field_l();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_l(f, rng), b = random_l(f, rng), c = random_l(f, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), NumFieldValue(f, Rational(1)));
    for (std::size_t s = 0; s < f->automorphism_count(); ++s) {
      EXPECT_EQ((a * b).apply(s), a.apply(s) * b.apply(s));
      for (std::size_t r = 0; r < f->automorphism_count(); ++r) {
        EXPECT_EQ(a.apply(r).apply(s), a.apply(f->compose(s, r)));
      }
    }
  }
}

TEST(Polynomial, Basics) {
  EXPECT_TRUE(is_irreducible(parse_polynomial("t^4 - 16*t^2 + 144")));
  EXPECT_FALSE(is_irreducible(parse_polynomial("t^4 - 4")));
  EXPECT_EQ(cyclotomic_polynomial(12), parse_polynomial("t^4 - t^2 + 1"));
  EXPECT_EQ(euler_phi(20), 8);
  auto inv = inverse_mod(parse_polynomial("t"), parse_polynomial("t^2 - 2"));
  EXPECT_EQ(inv, parse_polynomial("t/2"));
}
