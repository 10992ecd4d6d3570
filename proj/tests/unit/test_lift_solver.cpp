#include <gtest/gtest.h>

#include <random>

#include "criteria.hpp"
#include "equigen/errors.hpp"
#include "equigen/lift_solver.hpp"

using namespace equigen;
using namespace equigen::lifting;

TEST(DualKernel, InvertsTheJacobian) {
  const LocalModel m = LocalModel::make(4, 7);
  const std::vector<Rational> p{Rational(1), Rational(2), Rational(-1)};
  const RationalMatrix jac = evaluate(expansion::jacBarMatrix(m), std::span<const Rational>(p));
  const RationalMatrix prod = multiply(jac, dualKernelBasis(m, p));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(prod[i][j], Rational(i == j ? 1 : 0));
}

TEST(DualKernel, SingularJacobianIsAPreconditionError) {
  const LocalModel m = LocalModel::make(4, 6);
  EXPECT_THROW(dualKernelBasis(m, std::vector<Rational>{Rational(1), Rational(0), Rational(1)}), PreconditionError);
  EXPECT_THROW(LiftProblem(LocalModel::make(2, 3), {Rational(0)}, 10, 1, zeroProvider()), PreconditionError);
}

TEST(LiftProblem, SeedSolvesTheFirstOrder) {
  const LocalModel m = LocalModel::make(3, 5);
  const LiftProblem p(m, {Rational(1), Rational(2)}, 14, 1, zeroProvider());
  for (const auto& e : residualReport(p, p.seed())) EXPECT_TRUE(e.ok) << e.j;
}

TEST(LiftProblem, ZeroProviderStaysAtTheSeed) {
  // Without perturbation c(-inf) is already an exact solution.
  const LocalModel m = LocalModel::make(2, 3);
  const LiftProblem p(m, {Rational(3)}, 12, 1, zeroProvider());
  const LiftRun run = liftRun(p);
  EXPECT_TRUE(run.closed());
  EXPECT_EQ(run.state.c, p.base());
  EXPECT_EQ(run.state.order, 12 - 4);
}

TEST(LiftProblem, ModulusBelowFirstObstructionGivesTheSeed) {
  const LocalModel m = LocalModel::make(2, 3);
  const LiftProblem p(m, {Rational(1)}, 3, 1, zeroProvider());
  const LiftRun run = liftRun(p);
  EXPECT_EQ(run.history.size(), 1u);
  EXPECT_TRUE(run.closed());
}

TEST(LiftProblem, InadmissiblePerturbationNamesTheTerm) {
  const LocalModel m = LocalModel::make(2, 3);
  PerturbationTerm bad{Rational(1), 4, {0}, std::nullopt};  // needs weight >= 5
  auto provider = [&](int) { return std::vector<PerturbationTerm>{bad}; };
  try {
    LiftProblem(m, {Rational(1)}, 10, 1, provider);
    FAIL() << "expected ContractError";
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("o_4 term #1"), std::string::npos) << e.what();
  }
  PerturbationTerm quad{Rational(1), 0, {0}, std::make_pair(2, 2)};  // needs weight >= 4 - 4 = 0
  auto ok = [&](int) { return std::vector<PerturbationTerm>{quad}; };
  EXPECT_NO_THROW(LiftProblem(m, {Rational(1)}, 10, 1, ok));
  PerturbationTerm outside{Rational(1), 9, {0}, std::make_pair(2, 3)};
  auto wrong = [&](int) { return std::vector<PerturbationTerm>{outside}; };
  EXPECT_THROW(LiftProblem(m, {Rational(1)}, 10, 1, wrong), ContractError);
}

TEST(LiftStep, RejectsStatesThatAreNotClosed) {
  const LocalModel m = LocalModel::make(2, 3);
  const LiftProblem p(m, {Rational(1)}, 10, 1, zeroProvider());
  LiftState s = p.seed();
  s.c[0] += series::TSeries::monomial(10, 2, Rational(1));
  EXPECT_THROW(liftStep(p, s), PreconditionError);
}

TEST(LiftRun, RandomPerturbationsCloseOneOrderPerStep) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 6}}) {
    const auto o = equigen::testing::liftSinglePoint(21, a, b, 4);
    EXPECT_TRUE(o.ok()) << a << "," << b << ": " << o.summary();
  }
}

TEST(LiftRun, HigherWeightStillCloses) {
  std::mt19937_64 rng(2);
  const LocalModel m = LocalModel::make(3, 4);
  const int d = 2;
  const LiftProblem p(m, {Rational(1), Rational(1)}, d * 5 + 5, d, randomProvider(m, d, 2, rng));
  EXPECT_TRUE(liftRun(p).closed());
}

TEST(LiftMulti, InterleavedRunPassesTheAudit) {
  const auto o = equigen::testing::liftTwoPoint(31, 3);
  EXPECT_TRUE(o.ok()) << o.summary();
}

TEST(LiftMulti, WrongWeightIsRejected) {
  const auto config = SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 5)});
  std::vector<LiftProblem> problems;
  problems.emplace_back(config.at(1), std::vector<Rational>{Rational(1)}, 20, 1, zeroProvider());
  problems.emplace_back(config.at(2), std::vector<Rational>{Rational(1)}, 20, 2, zeroProvider());
  EXPECT_THROW(liftRunMulti(config, problems), UsageError);
}
