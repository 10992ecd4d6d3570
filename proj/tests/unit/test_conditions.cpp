#include <gtest/gtest.h>

#include "equigen/conditions.hpp"
#include "equigen/errors.hpp"

using namespace equigen;
using namespace equigen::groebner;

TEST(ConditionT, DoublePointNeedsNonzeroCoordinate) {
  const LocalModel m = LocalModel::make(2, 3);
  EXPECT_FALSE(checkT(m, std::vector<Rational>{Rational(0)}));
  EXPECT_TRUE(checkT(m, std::vector<Rational>{Rational(-2, 7)}));
}

TEST(ConditionT, UsesJacobianForHigherMultiplicity) {
  const LocalModel m = LocalModel::make(4, 6);
  // Jac(c2, c3, c4) has c3 as a factor.
  EXPECT_FALSE(checkT(m, std::vector<Rational>{Rational(1), Rational(0), Rational(2)}));
  const std::vector<Rational> p{Rational(1), Rational(1), Rational(1)};
  EXPECT_EQ(checkT(m, p), !expansion::jacBar(m).eval(p).isZero());
  EXPECT_THROW(checkT(m, std::vector<Rational>{Rational(1)}), UsageError);
}

TEST(ConditionG, FourSixFailsOnlyAtTwo) {
  const auto v = checkG(LocalModel::make(4, 6));
  EXPECT_EQ(v.overall, Verdict::kFails);
  EXPECT_EQ(v.detail.at(1).verdict, Verdict::kHolds);
  EXPECT_EQ(v.detail.at(2).verdict, Verdict::kFails);
  EXPECT_EQ(v.detail.at(3).verdict, Verdict::kHolds);
}

TEST(ConditionG, HoldsOnSmallCells) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {4, 7}}) {
    const auto v = checkG(LocalModel::make(a, b));
    EXPECT_EQ(v.overall, Verdict::kHolds) << a << "," << b;
    for (const auto& [i, d] : v.detail) EXPECT_EQ(d.bigFForm, d.simplifiedForm) << a << "," << b << " i=" << i;
  }
}

TEST(ConditionG, TinyBudgetTimesOut) {
  Budget tiny;
  tiny.maxPairs = 0;
  const auto v = checkG(LocalModel::make(4, 7), tiny);
  EXPECT_EQ(v.overall, Verdict::kTimeout);
}

TEST(ConditionG, SimplifiedGeneratorsSpanTheSameIdeal) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 4}, {4, 5}, {4, 6}, {5, 6}}) {
    const LocalModel m = LocalModel::make(a, b);
    for (int i = 1; i <= a - 1; ++i) {
      const auto big = buchberger(Ideal(coefficientVars(a), bigFGenerators(m, i)));
      const auto simple = buchberger(Ideal(coefficientVars(a), simplifiedGenerators(m, i)));
      ASSERT_FALSE(big.timedOut);
      EXPECT_EQ(big.basis, simple.basis) << a << "," << b << " i=" << i;
    }
  }
}

TEST(Witness, VerifiesByExactEvaluation) {
  // a = 2: F_-1 = k c2^2 for b = 3, so index 1 needs F_-1 != 0 and c2 != 0.
  const LocalModel m = LocalModel::make(2, 3);
  EXPECT_TRUE(witnessVerify(m, 1, std::vector<Rational>{Rational(3)}));
  EXPECT_FALSE(witnessVerify(m, 1, std::vector<Rational>{Rational(0)}));
}

TEST(Witness, FourSixIndexTwoHasNoWitnessOnTheCurve) {
  // Every term of Jac contains c3.
  const LocalModel m = LocalModel::make(4, 6);
  EXPECT_FALSE(witnessVerify(m, 2, std::vector<Rational>{Rational(2), Rational(0), Rational(1)}));
}
