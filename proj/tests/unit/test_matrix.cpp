#include <gtest/gtest.h>

#include <random>

#include "equigen/errors.hpp"
#include "equigen/matrix.hpp"
#include "oracles.hpp"

using namespace equigen;

namespace {

// Cofactor expansion, the textbook definition.
MPoly cofactorDet(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MPoly out(m[0][0].varsPtr());
  for (std::size_t col = 0; col < n; ++col) {
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != col) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const MPoly term = m[0][col] * cofactorDet(minor);
    if (col % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace

TEST(Matrix, BareissMatchesCofactorExpansion) {
  std::mt19937_64 rng(7);
  const auto v = coefficientVars(3);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 4;
    PolyMatrix m(n);
    for (auto& row : m)
      for (std::size_t k = 0; k < n; ++k)
        row.push_back(MPoly::monomial(v, {e(rng), e(rng)}, equigen::testing::randomRational(rng)) +
                      MPoly::constant(v, equigen::testing::randomRational(rng)));
    EXPECT_EQ(detBareiss(m), cofactorDet(m)) << "trial " << trial;
  }
}

TEST(Matrix, BareissHandlesZeroPivot) {
  const auto v = coefficientVars(2);
  const MPoly x = MPoly::variable(v, "c2");
  const PolyMatrix m{{MPoly(v), x}, {x, MPoly(v)}};
  EXPECT_EQ(detBareiss(m), -(x * x));
}

TEST(Matrix, InverseTimesMatrixIsIdentity) {
  const RationalMatrix m{{Rational(2), Rational(1), Rational(0)},
                         {Rational(1, 2), Rational(-1), Rational(3)},
                         {Rational(0), Rational(4), Rational(1)}};
  const auto inv = invert(m);
  ASSERT_TRUE(inv);
  const RationalMatrix id = multiply(m, *inv);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(id[i][j], Rational(i == j ? 1 : 0));
}

TEST(Matrix, SingularHasNoInverse) {
  const RationalMatrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(invert(m));
}

TEST(Matrix, DivideExact) {
  const auto v = coefficientVars(3);
  const MPoly x = MPoly::variable(v, "c2"), y = MPoly::variable(v, "c3");
  EXPECT_EQ(divideExact((x + y) * (x - y), x - y), x + y);
  EXPECT_THROW(divideExact(x * x + y, x), UsageError);
}
