#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "equigen/lifting.hpp"
#include "equigen/matrix.hpp"
#include "equigen/tseries.hpp"

// Order-by-order solver for
//   fbar_{b+j}(c) = t^{d(b+j)} f_{b+j}(c~) + o_{b+j}(c)  mod t^{d(b+j)+k},
// j = 1..a-1, with the fixed point c(-inf) substituted for c-tilde in fbar.
namespace equigen::lifting {

using series::TSeries;

// One summand of o_{b+j}: alpha t^tPower prod c_p^{exponents[p-2]}, times
// (c_k - c_k(-inf)) (c_l - c_l(-inf)) when `quadratic` = (k, l) is set.
struct PerturbationTerm {
  Rational alpha;
  int tPower = 0;
  Exponents exponents;
  std::optional<std::pair<int, int>> quadratic;

  std::string toString() const;
};

// Terms of o_{b+j} for j = 1..a-1.
using PerturbationProvider = std::function<std::vector<PerturbationTerm>(int j)>;

PerturbationProvider zeroProvider();

// `count` random admissible terms per equation (both shapes), drawn once
// from `rng`. Exponent vectors have a-1 entries and small degrees.
PerturbationProvider randomProvider(const LocalModel& model, int d, int count, std::mt19937_64& rng);

// Columns v_1..v_{a-1} of the inverse Jacobian of fbar at `point`, so that
// d fbar_{b+l}(point)[v_j] = delta_{lj}. Throws PreconditionError when the
// Jacobian is singular.
RationalMatrix dualKernelBasis(const LocalModel& model, std::span<const Rational> point);

struct LiftState {
  std::vector<TSeries> c;  // c_2..c_a
  // The equations hold mod t^{min(d(b+j)+order, K)}.
  int order = 1;
};

class LiftProblem {
 public:
  // Validates the witness (T), the base point and every perturbation term.
  // `base` defaults to c_i(-inf) = t^{d i} c~_i.
  LiftProblem(const LocalModel& model, std::vector<Rational> witness, int modulus, int d,
              const PerturbationProvider& provider, std::optional<std::vector<TSeries>> base = std::nullopt);

  const LocalModel& model() const { return model_; }
  int modulus() const { return modulus_; }
  int d() const { return d_; }
  const std::vector<TSeries>& base() const { return base_; }

  // c(0) = c(-inf), which solves the system at order 1.
  LiftState seed() const;

  // fbar_{b+j}(c) - t^{d(b+j)} f_{b+j}(c~) - o_{b+j}(c).
  TSeries residual(const LiftState& state, int j) const;
  // min(d(b+j) + order, K): the residual must vanish below this power.
  int target(const LiftState& state, int j) const;
  bool canStep(const LiftState& state) const;

 private:
  friend LiftState liftStep(const LiftProblem& problem, const LiftState& state);

  std::vector<TSeries> evaluationPoint(const LiftState& state) const;

  LocalModel model_;
  std::vector<Rational> witness_;
  int modulus_;
  int d_;
  std::vector<TSeries> base_;
  std::vector<MPoly> fBar_;         // over doubledVars(a)
  std::vector<TSeries> targets_;    // t^{d(b+j)} f_{b+j}(c~)
  std::vector<std::vector<PerturbationTerm>> perturbation_;
  RationalMatrix dual_;
};

// Advances the state from order k to k+1. Throws InternalConsistencyError
// if a residual fails to close or a closed coefficient changes.
LiftState liftStep(const LiftProblem& problem, const LiftState& state);

struct ResidualEntry {
  int j = 1;
  int ord = 0;
  int target = 0;
  bool ok = true;
};

struct LiftRun {
  LiftState state;
  std::vector<LiftState> history;  // history[0] is the seed
  std::vector<ResidualEntry> residuals;

  bool closed() const;
};

std::vector<ResidualEntry> residualReport(const LiftProblem& problem, const LiftState& state);

// Steps while d(b+1) + order < K.
LiftRun liftRun(const LiftProblem& problem);

struct AuditRecord {
  int step = 0;
  int point = 1;
  int order = 1;  // order reached by `point` after the step
  bool othersUntouched = true;
  bool closedOrdersPreserved = true;
  bool residualsClosed = true;
};

struct MultiLiftRun {
  std::vector<LiftState> states;
  std::vector<AuditRecord> audit;

  bool auditPassed() const;
};

// Round-robin schedule j = 1..e, repeated, with a non-interference audit of
// every step. problems[j-1] must use d_j from computeWeights(config).
MultiLiftRun liftRunMulti(const SingularConfig& config, const std::vector<LiftProblem>& problems);

}  // namespace equigen::lifting
