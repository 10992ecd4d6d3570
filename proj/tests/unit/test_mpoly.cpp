#include <gtest/gtest.h>

#include "equigen/errors.hpp"
#include "equigen/mpoly.hpp"
#include "equigen/poly_series.hpp"

using namespace equigen;

namespace {

MPoly c(const VarSetPtr& v, const char* name, int p = 1) { return MPoly::variable(v, name, p); }
MPoly k(const VarSetPtr& v, long n) { return MPoly::constant(v, Rational(n)); }

}  // namespace

TEST(MPoly, CanonicalFormCombinesAndSorts) {
  const auto v = coefficientVars(4);
  const MPoly p = c(v, "c3") * c(v, "c4") * Rational(3, 4) + c(v, "c2", 2) * c(v, "c3") * Rational(-3, 16);
  EXPECT_EQ(p.toString(), "-3/16*c2^2*c3 + 3/4*c3*c4");
  EXPECT_TRUE((p - p).isZero());
  EXPECT_EQ((p - p).toString(), "0");
}

TEST(MPoly, FromTermsDropsCancellingTerms) {
  const auto v = coefficientVars(3);
  const MPoly p = MPoly::fromTerms(v, {{{1, 0}, Rational(2)}, {{0, 1}, Rational(1)}, {{1, 0}, Rational(-2)}});
  EXPECT_EQ(p, c(v, "c3"));
  EXPECT_EQ(p.termCount(), 1u);
}

TEST(MPoly, ArithmeticMatchesEvaluation) {
  const auto v = coefficientVars(3);
  const MPoly p = c(v, "c2", 2) + Rational(3) * c(v, "c3") - MPoly::constant(v, Rational(1, 2));
  const MPoly q = c(v, "c2") * c(v, "c3") + k(v, 2);
  const std::vector<Rational> pt{Rational(2, 3), Rational(-5)};
  EXPECT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
  EXPECT_EQ((p + q).eval(pt), p.eval(pt) + q.eval(pt));
  EXPECT_EQ(p.pow(3).eval(pt), p.eval(pt).pow(3));
}

TEST(MPoly, EvalByNameRequiresKnownVariables) {
  const auto v = coefficientVars(3);
  const MPoly p = c(v, "c2") + c(v, "c3");
  EXPECT_EQ(p.eval(std::map<std::string, Rational>{{"c2", Rational(1)}, {"c3", Rational(2)}}), Rational(3));
  EXPECT_THROW(MPoly::variable(v, "c9"), UsageError);
}

TEST(MPoly, MixingVariableSetsThrows) {
  const MPoly p = c(coefficientVars(3), "c2");
  const MPoly q = c(coefficientVars(4), "c2");
  EXPECT_THROW(p + q, UsageError);
  EXPECT_EQ(p.embedInto(coefficientVars(4)), q);
}

TEST(MPoly, Derivative) {
  const auto v = coefficientVars(3);
  const MPoly p = c(v, "c2", 3) * c(v, "c3") + Rational(5) * c(v, "c3", 2);
  EXPECT_EQ(p.diff("c2"), Rational(3) * c(v, "c2", 2) * c(v, "c3"));
  EXPECT_EQ(p.diff("c3"), c(v, "c2", 3) + Rational(10) * c(v, "c3"));
}

TEST(MPoly, WeightedDegreeKinds) {
  const auto v = coefficientVars(4);
  EXPECT_EQ(MPoly(v).weightedDegree().kind, WeightedDegree::Kind::kZero);
  const WeightedDegree d = (c(v, "c2", 3) + c(v, "c3", 2) + c(v, "c2") * c(v, "c4")).weightedDegree();
  EXPECT_EQ(d.kind, WeightedDegree::Kind::kHomogeneous);
  EXPECT_EQ(d.degree, 6);
  EXPECT_EQ((c(v, "c2") + c(v, "c3")).weightedDegree().kind, WeightedDegree::Kind::kInhomogeneous);
}

TEST(MPoly, SubstituteIsARingHomomorphism) {
  const auto v = coefficientVars(3);
  const MPoly p = c(v, "c2", 2) * c(v, "c3") - c(v, "c3");
  const std::vector<MPoly> images{c(v, "c3"), c(v, "c2") + k(v, 1)};
  const MPoly s = p.substitute(v, images);
  EXPECT_EQ(s, c(v, "c3", 2) * (c(v, "c2") + k(v, 1)) - (c(v, "c2") + k(v, 1)));
}

TEST(VarSet, DoubledAndAuxiliary) {
  const auto d = doubledVars(3);
  ASSERT_EQ(d->size(), 4u);
  EXPECT_EQ(d->name(2), "ct2");
  EXPECT_EQ(d->weight(3), 3);
  const auto y = withAuxiliary(*coefficientVars(3));
  EXPECT_EQ(y->name(2), "y");
  EXPECT_EQ(y->weight(2), 0);
}

TEST(PolySeries, SquareRootSquaresBack) {
  const auto v = coefficientVars(2);
  PolySeries p = PolySeries::one(v, 8);
  p[2] = c(v, "c2");
  const PolySeries root = p.pow(Rational(1, 2));
  EXPECT_EQ(root * root, p);
  // (1 + c2 u^2)^(1/2) = 1 + c2/2 u^2 - c2^2/8 u^4 + ...
  EXPECT_EQ(root[4], Rational(-1, 8) * c(v, "c2", 2));
  EXPECT_TRUE(root[3].isZero());
}
