#include "test_support.hpp"

using namespace isotypic;
using namespace isotypic::testing;

namespace {

class Corpus : public ::testing::TestWithParam<std::string> {
 protected:
  void SetUp() override {
    analysis_ = std::make_unique<GroupAnalysis>(analysis_of(GetParam()));
    for (const auto& w : analysis_->irreps()) ews_.push_back(central_idempotent_eW(analysis_->table(), w));
    rng_.seed(static_cast<unsigned>(std::hash<std::string>{}(GetParam()) & 0xffffu));
  }
  const GroupAnalysis& a() const { return *analysis_; }
  QElement one() const { return QElement::basis(a().group_ptr(), 0, Rational(1)); }
  Subgroup random_conjugate(std::size_t s) {
    std::uniform_int_distribution<Element> d(0, static_cast<Element>(a().group().order() - 1));
    return conjugate_subgroup(a().group(), a().lattice()[s], d(rng_));
  }

  std::unique_ptr<GroupAnalysis> analysis_;
  std::vector<QElement> ews_;
  std::mt19937 rng_;
};

}  // namespace

TEST_P(Corpus, CentralIdempotentsSumToOne) {
  QElement sum(a().group_ptr(), Rational(0));
  for (const auto& e : ews_) sum += e;
  EXPECT_EQ(sum, one());
}

TEST_P(Corpus, CentralIdempotentsAreCentralAndOrthogonal) {
  for (std::size_t i = 0; i < ews_.size(); ++i) {
    EXPECT_TRUE(is_idempotent(ews_[i]));
    for (Element g = 0; g < a().group().order(); ++g) {
      EXPECT_EQ(ews_[i].left_translate(g), ews_[i].right_translate(g));
    }
    for (int trial = 0; trial < 3; ++trial) {
      QElement r = random_q_element(a().group_ptr(), rng_);
      EXPECT_EQ(r * ews_[i], ews_[i] * r);
    }
    for (std::size_t j = i + 1; j < ews_.size(); ++j) EXPECT_TRUE(are_orthogonal(ews_[i], ews_[j]));
  }
}

TEST_P(Corpus, SubgroupIdempotentsSumToProjector) {
  for (std::size_t s = 0; s < a().lattice().size(); ++s) {
    for (const Subgroup& h : {a().lattice()[s], random_conjugate(s)}) {
      QElement p = projector_pH(a().group_ptr(), h);
      QElement sum(a().group_ptr(), Rational(0));
      for (std::size_t j = 0; j < ews_.size(); ++j) {
        QElement f = subgroup_idempotent_fH(a().group_ptr(), h, ews_[j]);
        EXPECT_TRUE(is_idempotent(f));
        for (auto x : h.members) {
          EXPECT_EQ(f.left_translate(x), f);
          EXPECT_EQ(f.right_translate(x), f);
        }
        for (std::size_t k = 0; k < ews_.size(); ++k) {
          if (k != j) EXPECT_TRUE((f * ews_[k]).is_zero());
        }
        sum += f;
      }
      EXPECT_EQ(sum, p);
    }
  }
}

TEST_P(Corpus, PrymAdditivityAndNonNegativity) {
  const std::size_t L = a().lattice().size();
  for (std::size_t h = 0; h < L; ++h) {
    for (std::size_t n = 0; n < L; ++n) {
      if (!a().lattice().contained_up_to_conjugacy(h, n)) continue;
      auto p = decompose_prym(a(), h, n).exponents();
      auto in = decompose_intermediate(a(), n).exponents();
      auto ih = decompose_intermediate(a(), h).exponents();
      ASSERT_EQ(p.size(), ih.size());
      for (std::size_t j = 0; j < p.size(); ++j) {
        EXPECT_GE(p[j], 0);
        EXPECT_EQ(p[j] + in[j], ih[j]);
      }
      EXPECT_EQ(p[trivial_irrep(a())], 0);
    }
  }
}

TEST_P(Corpus, JacobianExponentsAreDegreesOverSchur) {
  auto r = decompose_jacobian(a());
  for (std::size_t j = 0; j < a().irreps().size(); ++j) {
    EXPECT_EQ(r.exponents()[j], a().irreps()[j].degree / a().irreps()[j].schur.m);
  }
  EXPECT_EQ(r.exponents()[trivial_irrep(a())], 1);
}

TEST_P(Corpus, GroupAlgebraRingAxioms) {
  for (int trial = 0; trial < 4; ++trial) {
    QElement x = random_q_element(a().group_ptr(), rng_);
    QElement y = random_q_element(a().group_ptr(), rng_);
    QElement z = random_q_element(a().group_ptr(), rng_);
    EXPECT_EQ((x * y) * z, x * (y * z));
    QElement yz = y;
    yz += z;
    QElement xy = x * y;
    xy += x * z;
    EXPECT_EQ(x * yz, xy);
    EXPECT_EQ(one() * x, x);
    EXPECT_EQ(x * one(), x);
    EXPECT_EQ(oracle_mul(a().group(), x.coeffs(), y.coeffs()), (x * y).coeffs());
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, Corpus, ::testing::Values("s3", "d4", "q8", "a4", "s4", "sl23"),
                         [](const ::testing::TestParamInfo<std::string>& info) { return info.param; });
