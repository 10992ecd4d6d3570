#include <gtest/gtest.h>

#include <random>
#include <set>

#include "equigen/errors.hpp"
#include "equigen/lifting.hpp"
#include "oracles.hpp"

using namespace equigen;
using namespace equigen::lifting;

namespace {

SingularConfig twoDouble() { return SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 5)}); }

SectionProfile profile(std::string id, std::map<PairIndex, Rational> residues) { return {std::move(id), residues}; }

}  // namespace

TEST(Weights, LcmOfContactOrders) {
  const Weights w = computeWeights(twoDouble());
  EXPECT_EQ(w.M, 12);
  EXPECT_EQ(w.d, (std::vector<long>{3, 2}));
  const auto c = SingularConfig::make({LocalModel::make(3, 4), LocalModel::make(4, 6), LocalModel::make(2, 9)});
  const Weights w3 = computeWeights(c);
  EXPECT_EQ(w3.M, 70);
  EXPECT_EQ(w3.d, (std::vector<long>{14, 10, 7}));
}

TEST(Weights, EmptyConfigurationIsRejected) { EXPECT_THROW(SingularConfig::make({}), UsageError); }

TEST(PairOrder, SmallerWeightIsGreaterAndTiesUseThePoint) {
  const SingularConfig c = twoDouble();
  const Weights w = computeWeights(c);
  EXPECT_EQ(pairWeight(c, w, {1, 1}), 12);
  EXPECT_EQ(pairWeight(c, w, {2, 1}), 12);
  EXPECT_EQ(pairCompare(c, {2, 1}, {1, 1}), std::strong_ordering::greater);
  const auto c2 = SingularConfig::make({LocalModel::make(3, 4)});
  // weights 5 (m=2) and 6 (m=1): m = 2 is greater.
  EXPECT_EQ(pairCompare(c2, {1, 2}, {1, 1}), std::strong_ordering::greater);
}

TEST(Profiles, ValidationRejectsBadEntries) {
  const SingularConfig c = twoDouble();
  EXPECT_THROW(validateProfile(c, profile("x", {{{1, 2}, Rational(1)}})), UsageError);
  EXPECT_THROW(validateProfile(c, profile("x", {{{3, 1}, Rational(1)}})), UsageError);
  EXPECT_THROW(validateProfile(c, profile("x", {{{1, 1}, Rational(0)}})), UsageError);
}

TEST(Profiles, OrdAgreesWithMinimumWeight) {
  std::mt19937_64 rng(5);
  const auto c = SingularConfig::make({LocalModel::make(3, 4), LocalModel::make(4, 7), LocalModel::make(2, 5)});
  for (int trial = 0; trial < 200; ++trial) {
    SectionProfile s{"s", {}};
    for (int j = 1; j <= 3; ++j)
      for (int m = 1; m <= c.at(j).a - 1; ++m)
        if (rng() % 3 == 0) s.residues[{j, m}] = equigen::testing::randomNonzero(rng);
    const SectionOrd o = sectionOrd(c, s);
    EXPECT_EQ(o.ord, sectionOrdByMinimum(c, s));
    EXPECT_EQ(o.P.has_value(), !s.residues.empty());
  }
}

TEST(BasisI, DistinctLeadingPairsAndSameSpan) {
  const auto c = SingularConfig::make({LocalModel::make(3, 4), LocalModel::make(3, 5)});
  const std::vector<SectionProfile> sections{
      profile("eta1", {{{1, 1}, Rational(1)}, {{2, 2}, Rational(2)}}),
      profile("eta2", {{{1, 2}, Rational(1)}, {{2, 2}, Rational(-1)}}),
      profile("eta3", {{{2, 2}, Rational(3)}, {{1, 1}, Rational(1)}, {{2, 1}, Rational(1)}}),
      profile("hol", {}),
  };
  const BasisI basis = buildBasisI(c, sections);
  ASSERT_EQ(basis.entries.size(), 3u);
  EXPECT_EQ(basis.holomorphic, std::vector<std::string>{"hol"});
  std::set<PairIndex> leads;
  for (std::size_t k = 0; k < basis.entries.size(); ++k) {
    leads.insert(basis.entries[k].P);
    EXPECT_EQ(sectionOrd(c, basis.entries[k].section).P, basis.entries[k].P);
    if (k > 0) EXPECT_GE(basis.entries[k - 1].ord, basis.entries[k].ord);
  }
  EXPECT_EQ(leads.size(), 3u);
  std::vector<SectionProfile> reduced;
  for (const auto& e : basis.entries) reduced.push_back(e.section);
  for (const auto& s : sections) EXPECT_TRUE(inResidueSpan(c, reduced, s.residues)) << s.id;
}

TEST(BasisI, DependentSectionIsNamed) {
  const SingularConfig c = twoDouble();
  const std::vector<SectionProfile> sections{profile("a", {{{1, 1}, Rational(1)}}),
                                             profile("b", {{{2, 1}, Rational(1)}}),
                                             profile("c", {{{1, 1}, Rational(2)}, {{2, 1}, Rational(-1)}})};
  try {
    buildBasisI(c, sections);
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("'c'"), std::string::npos);
  }
}

TEST(Star, SingleTermIsNormalized) {
  const auto c = SingularConfig::make({LocalModel::make(3, 4)});
  const StarSystem s = buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(5)}})});
  ASSERT_EQ(s.equations.size(), 1u);
  ASSERT_EQ(s.equations[0].terms.size(), 1u);
  EXPECT_EQ(s.equations[0].terms[0].coefficient, Rational(1));
  EXPECT_EQ(s.equations[0].terms[0].n, 2);
  EXPECT_EQ(s.equations[0].terms[0].F, expansion::bigF(c.at(1), 2));
}

TEST(Star, CoefficientsAreMultiplicityTimesResidue) {
  const SingularConfig c = twoDouble();
  const StarSystem s = buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(1, 3)}, {{2, 1}, Rational(-2)}})});
  ASSERT_EQ(s.equations[0].terms.size(), 2u);
  EXPECT_EQ(s.equations[0].terms[0].coefficient, Rational(2, 3));
  EXPECT_EQ(s.equations[0].terms[1].coefficient, Rational(-4));
  EXPECT_EQ(s.equations[0].ord, 12);
}

TEST(Star, OnlyPairsAtTheSectionOrderContribute) {
  const auto c = SingularConfig::make({LocalModel::make(3, 4), LocalModel::make(3, 5)});
  // M = 30, d = (6, 5): weights (1,1) 36, (1,2) 30, (2,1) 35, (2,2) 30.
  const StarSystem s =
      buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(1)}, {{1, 2}, Rational(1)}, {{2, 2}, Rational(1)}})});
  ASSERT_EQ(s.equations[0].terms.size(), 2u);
  EXPECT_EQ(s.equations[0].ord, 30);
}

TEST(Star, EvaluationAndSatisfaction) {
  const auto c = SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 3)});
  const StarSystem s = buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(1)}, {{2, 1}, Rational(-1)}})});
  EXPECT_TRUE(starSatisfied(s, {{Rational(3)}, {Rational(-3)}}));
  EXPECT_FALSE(starSatisfied(s, {{Rational(3)}, {Rational(1)}}));
  EXPECT_THROW(starSatisfied(s, {{Rational(3)}}), UsageError);
  EXPECT_THROW(starSatisfied(s, {{Rational(3)}, {Rational(1), Rational(2)}}), UsageError);
}

TEST(RationalRoot, ExactRootsOnly) {
  EXPECT_EQ(rationalRoot(Rational(27, 8), 3), Rational(3, 2));
  EXPECT_EQ(rationalRoot(Rational(-8), 3), Rational(-2));
  EXPECT_EQ(rationalRoot(Rational(0), 4), Rational(0));
  EXPECT_FALSE(rationalRoot(Rational(2), 2));
  EXPECT_FALSE(rationalRoot(Rational(-4), 2));
  EXPECT_FALSE(rationalRoot(Rational(4, 3), 2));
}

TEST(Rebalance, RescalesOneBlockToSolve) {
  const auto c = SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 3)});
  // 2 F(c1) - 32 F(c2) with F homogeneous of weight 4: alpha^4 = 1/16.
  const StarSystem s = buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(1)}, {{2, 1}, Rational(-16)}})});
  const BlockPoints start{{Rational(1)}, {Rational(1)}};
  const auto fixed = rebalanceBlock(s.equations[0], start, 2);
  ASSERT_TRUE(fixed);
  EXPECT_EQ((*fixed)[1][0], Rational(1, 4));
  EXPECT_EQ((*fixed)[0], start[0]);
  EXPECT_TRUE(evaluateStar(s.equations[0], *fixed).isZero());
}

TEST(Rebalance, NoRationalScaleGivesNullopt) {
  const auto c = SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 3)});
  const StarSystem s = buildStarSystem(c, {profile("eta", {{{1, 1}, Rational(1)}, {{2, 1}, Rational(1)}})});
  EXPECT_FALSE(rebalanceBlock(s.equations[0], {{Rational(1)}, {Rational(1)}}, 2));
  EXPECT_FALSE(rebalanceBlock(s.equations[0], {{Rational(0)}, {Rational(1)}}, 2));
}
