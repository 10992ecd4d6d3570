#include "equigen/lift_solver.hpp"

#include <algorithm>
#include <sstream>

#include "equigen/errors.hpp"

namespace equigen::lifting {

namespace {

TSeries evalSeries(const MPoly& p, const std::vector<TSeries>& point, int modulus) {
  const TSeries zero(modulus);
  const TSeries one = TSeries::constant(modulus, Rational(1));
  return evaluateIn<TSeries>(p, std::span<const TSeries>(point), zero, one,
                             [&](const Rational& r) { return TSeries::constant(modulus, r); });
}

TSeries power(const TSeries& x, int e) {
  TSeries out = TSeries::constant(x.modulus(), Rational(1));
  for (int i = 0; i < e; ++i) out = out * x;
  return out;
}

}  // namespace

std::string PerturbationTerm::toString() const {
  std::ostringstream os;
  os << alpha.toString() << "*t^" << tPower;
  for (std::size_t p = 0; p < exponents.size(); ++p) {
    if (exponents[p] != 0) os << "*c" << p + 2 << "^" << exponents[p];
  }
  if (quadratic) os << "*(c" << quadratic->first << "-c" << quadratic->first << "(-inf))*(c" << quadratic->second
                    << "-c" << quadratic->second << "(-inf))";
  return os.str();
}

PerturbationProvider zeroProvider() {
  return [](int) { return std::vector<PerturbationTerm>{}; };
}

PerturbationProvider randomProvider(const LocalModel& model, int d, int count, std::mt19937_64& rng) {
  const int a = model.a;
  std::uniform_int_distribution<int> numerator(1, 9);
  std::uniform_int_distribution<int> denominator(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> exponent(0, 2);
  std::uniform_int_distribution<int> slack(0, 2);
  std::uniform_int_distribution<int> shape(0, 2);
  std::uniform_int_distribution<int> index(2, a);

  std::vector<std::vector<PerturbationTerm>> table(a - 1);
  for (int j = 1; j <= a - 1; ++j) {
    for (int n = 0; n < count; ++n) {
      PerturbationTerm term;
      term.alpha = Rational(numerator(rng) * (sign(rng) ? -1 : 1), denominator(rng));
      term.exponents.resize(a - 1);
      long weight = 0;
      for (int p = 2; p <= a; ++p) {
        term.exponents[p - 2] = exponent(rng);
        weight += static_cast<long>(d) * p * term.exponents[p - 2];
      }
      long need = static_cast<long>(d) * (model.b + j) + 1;
      if (shape(rng) == 0) {
        const int k = index(rng);
        const int l = index(rng);
        term.quadratic = std::make_pair(k, l);
        need = static_cast<long>(d) * (model.b + j - k - l);
      }
      term.tPower = static_cast<int>(std::max(0L, need - weight)) + slack(rng);
      table[j - 1].push_back(std::move(term));
    }
  }
  return [table = std::move(table)](int j) { return table.at(j - 1); };
}

RationalMatrix dualKernelBasis(const LocalModel& model, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != model.a - 1)
    throw UsageError("dualKernelBasis: point must have " + std::to_string(model.a - 1) + " coordinates");
  const RationalMatrix jac = evaluate(expansion::jacBarMatrix(model), point);
  auto inverse = invert(jac);
  if (!inverse) throw PreconditionError("condition (T) fails at the given point: the Jacobian of fbar is singular");
  return *inverse;
}

LiftProblem::LiftProblem(const LocalModel& model, std::vector<Rational> witness, int modulus, int d,
                         const PerturbationProvider& provider, std::optional<std::vector<TSeries>> base)
    : model_(model), witness_(std::move(witness)), modulus_(modulus), d_(d) {
  const int a = model.a;
  if (modulus < 1) throw UsageError("lift: modulus K must be positive");
  if (d < 1) throw UsageError("lift: weight d must be positive");
  if (static_cast<int>(witness_.size()) != a - 1)
    throw UsageError("lift: witness must have " + std::to_string(a - 1) + " coordinates");
  dual_ = dualKernelBasis(model, witness_);

  if (base) {
    if (static_cast<int>(base->size()) != a - 1) throw UsageError("lift: base point must have a-1 series");
    for (int i = 2; i <= a; ++i) {
      const TSeries& ci = (*base)[i - 2];
      if (ci.modulus() != modulus) throw UsageError("lift: base point modulus differs from K");
      if (ci.ord() < d * i || ci.coefficient(d * i) != witness_[i - 2])
        throw UsageError("lift: c_" + std::to_string(i) + "(-inf) is not t^" + std::to_string(d * i) +
                         " times the witness coordinate modulo the next order");
    }
    base_ = std::move(*base);
  } else {
    for (int i = 2; i <= a; ++i) base_.push_back(TSeries::monomial(modulus, d * i, witness_[i - 2]));
  }

  for (int j = 1; j <= a - 1; ++j) {
    fBar_.push_back(expansion::fBar(model, j));
    const Rational value = expansion::fCoeff(model, model.b, model.b + j).eval(std::span<const Rational>(witness_));
    targets_.push_back(TSeries::monomial(modulus, d * (model.b + j), value));

    std::vector<PerturbationTerm> terms = provider(j);
    const int needPlain = d * (model.b + j) + 1;
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const PerturbationTerm& term = terms[n];
      const std::string where = "o_" + std::to_string(model.b + j) + " term #" + std::to_string(n + 1) + " (" +
                                term.toString() + ")";
      if (static_cast<int>(term.exponents.size()) != a - 1)
        throw ContractError(where + ": exponent vector must have " + std::to_string(a - 1) + " entries");
      if (term.tPower < 0 || std::any_of(term.exponents.begin(), term.exponents.end(), [](int e) { return e < 0; }))
        throw ContractError(where + ": negative exponent");
      long weight = term.tPower;
      for (int p = 2; p <= a; ++p) weight += static_cast<long>(d) * p * term.exponents[p - 2];
      long need = needPlain;
      if (term.quadratic) {
        const auto [k, l] = *term.quadratic;
        if (k < 2 || k > a || l < 2 || l > a)
          throw ContractError(where + ": quadratic factor index outside [2, " + std::to_string(a) + "]");
        need = static_cast<long>(d) * (model.b + j) - static_cast<long>(d) * (k + l);
      }
      if (weight < need)
        throw ContractError(where + ": joint weight " + std::to_string(weight) + " is below the admissible " +
                            std::to_string(need));
    }
    perturbation_.push_back(std::move(terms));
  }
}

LiftState LiftProblem::seed() const { return LiftState{base_, 1}; }

std::vector<TSeries> LiftProblem::evaluationPoint(const LiftState& state) const {
  std::vector<TSeries> point = state.c;
  point.insert(point.end(), base_.begin(), base_.end());
  return point;
}

TSeries LiftProblem::residual(const LiftState& state, int j) const {
  TSeries r = evalSeries(fBar_.at(j - 1), evaluationPoint(state), modulus_) - targets_.at(j - 1);
  for (const PerturbationTerm& term : perturbation_.at(j - 1)) {
    TSeries value = TSeries::monomial(modulus_, std::min(term.tPower, modulus_), term.alpha);
    if (value.isZero()) continue;
    for (std::size_t p = 0; p < term.exponents.size(); ++p) value = value * power(state.c[p], term.exponents[p]);
    if (term.quadratic) {
      const auto [k, l] = *term.quadratic;
      value = value * (state.c[k - 2] - base_[k - 2]) * (state.c[l - 2] - base_[l - 2]);
    }
    r -= value;
  }
  return r;
}

int LiftProblem::target(const LiftState& state, int j) const {
  return std::min(d_ * (model_.b + j) + state.order, modulus_);
}

bool LiftProblem::canStep(const LiftState& state) const { return d_ * (model_.b + 1) + state.order < modulus_; }

LiftState liftStep(const LiftProblem& problem, const LiftState& state) {
  const LocalModel& model = problem.model();
  const int a = model.a;
  const int k = state.order;
  const int K = problem.modulus();
  const int d = problem.d();

  std::vector<Rational> h(a - 1, Rational(0));
  for (int j = 1; j <= a - 1; ++j) {
    const TSeries r = problem.residual(state, j);
    if (r.ord() < problem.target(state, j))
      throw PreconditionError("liftStep: equation " + std::to_string(j) + " does not hold at order " +
                              std::to_string(k));
    const int e = d * (model.b + j) + k;
    if (e < K) h[j - 1] = -r.coefficient(e);
  }

  LiftState next = state;
  next.order = k + 1;
  for (int l = 2; l <= a; ++l) {
    Rational v(0);
    for (int j = 1; j <= a - 1; ++j) v += problem.dual_[l - 2][j - 1] * h[j - 1];
    if (!v.isZero() && d * l + k < K) next.c[l - 2] += TSeries::monomial(K, d * l + k, v);
  }

  for (int i = 2; i <= a; ++i) {
    if ((next.c[i - 2] - state.c[i - 2]).ord() < d * i + k)
      throw InternalConsistencyError("liftStep: c_" + std::to_string(i) + " changed below t^" +
                                     std::to_string(d * i + k));
  }
  for (int j = 1; j <= a - 1; ++j) {
    const TSeries r = problem.residual(next, j);
    if (r.ord() < problem.target(next, j))
      throw InternalConsistencyError("liftStep: equation " + std::to_string(j) + " left a residual at t^" +
                                     std::to_string(r.ord()) + " after the step to order " +
                                     std::to_string(next.order));
  }
  return next;
}

std::vector<ResidualEntry> residualReport(const LiftProblem& problem, const LiftState& state) {
  std::vector<ResidualEntry> out;
  for (int j = 1; j <= problem.model().a - 1; ++j) {
    ResidualEntry e;
    e.j = j;
    e.ord = problem.residual(state, j).ord();
    e.target = problem.target(state, j);
    e.ok = e.ord >= e.target;
    out.push_back(e);
  }
  return out;
}

bool LiftRun::closed() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const ResidualEntry& e) { return e.ok; });
}

LiftRun liftRun(const LiftProblem& problem) {
  LiftRun run;
  run.state = problem.seed();
  run.history.push_back(run.state);
  while (problem.canStep(run.state)) {
    run.state = liftStep(problem, run.state);
    run.history.push_back(run.state);
  }
  run.residuals = residualReport(problem, run.state);
  return run;
}

bool MultiLiftRun::auditPassed() const {
  return std::all_of(audit.begin(), audit.end(), [](const AuditRecord& r) {
    return r.othersUntouched && r.closedOrdersPreserved && r.residualsClosed;
  });
}

MultiLiftRun liftRunMulti(const SingularConfig& config, const std::vector<LiftProblem>& problems) {
  if (static_cast<int>(problems.size()) != config.size())
    throw UsageError("liftRunMulti: expected one problem per singular point");
  const Weights w = computeWeights(config);
  for (int j = 1; j <= config.size(); ++j) {
    const LiftProblem& p = problems[j - 1];
    if (!(p.model() == config.at(j)))
      throw UsageError("liftRunMulti: problem " + std::to_string(j) + " uses a different local model");
    if (p.d() != w.d[j - 1])
      throw UsageError("liftRunMulti: problem " + std::to_string(j) + " uses d=" + std::to_string(p.d()) +
                       " but the configuration requires d=" + std::to_string(w.d[j - 1]));
    if (p.modulus() != problems[0].modulus()) throw UsageError("liftRunMulti: all problems must share K");
  }

  auto allClosed = [&](const std::vector<LiftState>& states, int j) {
    const auto report = residualReport(problems[j - 1], states[j - 1]);
    return std::all_of(report.begin(), report.end(), [](const ResidualEntry& e) { return e.ok; });
  };

  MultiLiftRun run;
  for (const auto& p : problems) run.states.push_back(p.seed());
  int step = 0;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int j = 1; j <= config.size(); ++j) {
      const LiftProblem& problem = problems[j - 1];
      if (!problem.canStep(run.states[j - 1])) continue;
      const std::vector<LiftState> before = run.states;
      run.states[j - 1] = liftStep(problem, before[j - 1]);
      progressed = true;

      AuditRecord rec;
      rec.step = ++step;
      rec.point = j;
      rec.order = run.states[j - 1].order;
      const int k = before[j - 1].order;
      for (int other = 1; other <= config.size(); ++other) {
        if (other == j) continue;
        if (!(run.states[other - 1].c == before[other - 1].c) || run.states[other - 1].order != before[other - 1].order)
          rec.othersUntouched = false;
        if (!allClosed(run.states, other)) rec.residualsClosed = false;
      }
      for (int i = 2; i <= config.at(j).a; ++i) {
        if ((run.states[j - 1].c[i - 2] - before[j - 1].c[i - 2]).ord() < problem.d() * i + k)
          rec.closedOrdersPreserved = false;
      }
      if (!allClosed(run.states, j)) rec.residualsClosed = false;
      run.audit.push_back(rec);
    }
  }
  return run;
}

}  // namespace equigen::lifting
