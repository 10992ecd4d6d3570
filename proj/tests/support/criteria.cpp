#include "criteria.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "equigen/expansion.hpp"
#include "equigen/lift_solver.hpp"
#include "equigen/reparam.hpp"
#include "oracles.hpp"

namespace equigen::testing {

namespace {

using expansion::LocalModel;
using series::TSeries;

// Bivariate truncated series: x[u][t].
using Bi = std::vector<std::vector<Rational>>;

Bi biZero(int nu, int nt) { return Bi(nu, std::vector<Rational>(nt, Rational(0))); }

Bi biMul(const Bi& x, const Bi& y) {
  const int nu = static_cast<int>(x.size());
  const int nt = static_cast<int>(x[0].size());
  Bi out = biZero(nu, nt);
  for (int i = 0; i < nu; ++i)
    for (int p = 0; p < nt; ++p) {
      if (x[i][p].isZero()) continue;
      for (int j = 0; i + j < nu; ++j)
        for (int q = 0; p + q < nt; ++q) out[i + j][p + q] += x[i][p] * y[j][q];
    }
  return out;
}

Bi biPow(const Bi& x, int e) {
  Bi out = biZero(static_cast<int>(x.size()), static_cast<int>(x[0].size()));
  out[0][0] = Rational(1);
  for (int n = 0; n < e; ++n) out = biMul(out, x);
  return out;
}

// The series c as a u^k-coefficient.
void biAdd(Bi& target, int uPower, const TSeries& c, const Rational& scale = Rational(1)) {
  if (uPower >= static_cast<int>(target.size())) return;
  for (int p = 0; p < static_cast<int>(target[0].size()); ++p) target[uPower][p] += scale * c.coefficient(p);
}

TSeries randomSeries(std::mt19937_64& rng, int modulus, int minOrd) {
  TSeries s(modulus);
  std::bernoulli_distribution keep(0.5);
  for (int p = std::max(0, minOrd); p < modulus; ++p) {
    if (keep(rng)) s.setCoefficient(p, randomRational(rng, 6, 3));
  }
  return s;
}

struct ReparamCase {
  LocalModel model;
  int K = 1;
  int smax = 2;
  std::vector<TSeries> cN, cN1, deltas;
};

ReparamCase randomReparamCase(std::mt19937_64& rng, int a) {
  ReparamCase c;
  c.model = LocalModel::make(a, a + 1);
  c.K = std::uniform_int_distribution<int>(a + 2, 12)(rng);
  c.smax = std::uniform_int_distribution<int>(a + 1, a + 5)(rng);
  for (int i = 2; i <= a; ++i) {
    c.cN.push_back(randomSeries(rng, c.K, i));
    c.deltas.push_back(randomSeries(rng, c.K, i + 1));
    c.cN1.push_back(c.cN.back() + c.deltas.back());
  }
  return c;
}

int clampedBound(long bound, int K) { return static_cast<int>(std::min<long>(bound, K)); }

}  // namespace

void Outcome::fail(std::string message) {
  ++cases;
  ++failures;
  if (messages.size() < 5) messages.push_back(std::move(message));
}

std::string Outcome::summary() const {
  std::ostringstream os;
  os << cases << " cases, " << failures << " failures";
  if (skipped) os << ", " << skipped << " inconclusive";
  for (const auto& m : messages) os << "; " << m;
  return os.str();
}

Outcome homogeneityAndEuler(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, MPoly>> pool;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7}}) {
    const LocalModel m = LocalModel::make(a, b);
    const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
    for (int j = 1; j <= a + 1; ++j) pool.emplace_back(tag + "f_" + std::to_string(b + j), expansion::fCoeff(m, b, b + j));
    for (int i = 2; i <= 6; ++i) pool.emplace_back(tag + "gamma_" + std::to_string(i), expansion::gammaCoeff(m, i));
    const auto theta = expansion::thetaSeries(m, 6);
    for (int i = 2; i <= 6; ++i) pool.emplace_back(tag + "theta_" + std::to_string(i), theta[i]);
    for (int l : {-2, -1, 2, b}) {
      for (int i = 0; i <= 6; ++i)
        pool.emplace_back(tag + "Theta^" + std::to_string(l) + "_" + std::to_string(i), expansion::thetaCap(m, l, i, 6));
    }
    for (int n = 1; n <= a - 1; ++n) pool.emplace_back(tag + "F_-" + std::to_string(n), expansion::bigF(m, n));
  }

  Outcome out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int c = 0; c < cases; ++c) {
    const auto& [name, p] = pool[pick(rng)];
    const WeightedDegree deg = p.weightedDegree();
    if (deg.kind == WeightedDegree::Kind::kInhomogeneous) {
      out.fail(name + " is not weighted homogeneous");
      continue;
    }
    const std::size_t n = p.vars().size();
    const auto point = randomPoint(rng, n);
    const Rational alpha = randomNonzero(rng);
    std::vector<Rational> scaled;
    for (std::size_t v = 0; v < n; ++v) scaled.push_back(point[v] * alpha.pow(p.vars().weight(v)));
    const Rational base = p.eval(point);
    if (p.eval(scaled) != alpha.pow(deg.degree) * base) {
      out.fail(name + ": scaling identity");
      continue;
    }
    Rational euler(0);
    for (std::size_t v = 0; v < n; ++v) euler += Rational(p.vars().weight(v)) * point[v] * p.diff(v).eval(point);
    if (euler != Rational(deg.degree) * base) {
      out.fail(name + ": Euler identity");
      continue;
    }
    out.pass();
  }
  return out;
}

Outcome powerConsistency(std::uint64_t seed, int cases) {
  constexpr int kN = 10;
  std::mt19937_64 rng(seed);
  struct Model {
    LocalModel m;
    std::vector<MPoly> f;  // f[k]: coefficient of u^k in (1 + sum c u)^(b/a)
  };
  std::vector<Model> models;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 6}}) {
    Model md{LocalModel::make(a, b), {}};
    for (int k = 0; k <= kN; ++k) md.f.push_back(expansion::fCoeff(md.m, b, k));
    models.push_back(std::move(md));
  }
  Outcome out;
  for (int c = 0; c < cases; ++c) {
    const Model& md = models[c % models.size()];
    const auto point = randomPoint(rng, md.m.a - 1);
    Series t(kN + 1);
    for (int k = 0; k <= kN; ++k) t[k] = md.f[k].eval(point);
    const Series lhs = power(t, md.m.a);
    const Series rhs = power(unitPolynomial(point, kN + 1), md.m.b);
    if (lhs != rhs) {
      out.fail("(" + std::to_string(md.m.a) + "," + std::to_string(md.m.b) + ") power identity");
      continue;
    }
    out.pass();
  }
  return out;
}

Outcome thetaGammaRoundTrip(std::uint64_t seed, int cases) {
  constexpr int kN = 8;
  std::mt19937_64 rng(seed);
  struct Model {
    LocalModel m;
    std::vector<MPoly> gamma, theta;
  };
  std::vector<Model> models;
  for (int a = 2; a <= 5; ++a) {
    Model md{LocalModel::make(a, a + 1), {}, expansion::thetaSeries(LocalModel::make(a, a + 1), kN)};
    for (int i = 2; i <= kN; ++i) md.gamma.push_back(expansion::gammaCoeff(md.m, i));
    models.push_back(std::move(md));
  }
  Outcome out;
  for (int c = 0; c < cases; ++c) {
    const Model& md = models[c % models.size()];
    const auto point = randomPoint(rng, md.m.a - 1);
    Series g = one(kN + 1);
    for (int i = 2; i <= kN; ++i) g[i] = md.gamma[i - 2].eval(point);
    Series th = one(kN + 1);
    for (int i = 2; i <= kN; ++i) th[i] = md.theta[i].eval(point);
    // S = s G(u), U = 1/S = u / G(u); s = S theta(U)  =>  G(u) theta(U) = 1.
    Series uOverG = inverse(g);
    uOverG.insert(uOverG.begin(), Rational(0));
    uOverG.pop_back();
    if (mul(g, compose(th, uOverG)) != one(kN + 1)) {
      out.fail("a=" + std::to_string(md.m.a) + ": theta does not invert gamma");
      continue;
    }
    if (power(g, md.m.a) != unitPolynomial(point, kN + 1)) {
      out.fail("a=" + std::to_string(md.m.a) + ": gamma is not the a-th root");
      continue;
    }
    out.pass();
  }
  return out;
}

Outcome thetaAgreement(std::uint64_t seed, int cases) {
  constexpr int kN = 8;
  std::mt19937_64 rng(seed);
  std::map<std::tuple<int, int, int>, std::pair<MPoly, bool>> memo;
  std::map<int, std::vector<MPoly>> thetas;
  Outcome out;
  std::uniform_int_distribution<int> pickA(2, 4), pickL(-4, 4), pickI(0, kN);
  for (int c = 0; c < cases; ++c) {
    const int a = pickA(rng), l = pickL(rng), i = pickI(rng);
    const LocalModel m = LocalModel::make(a, a + 1);
    auto key = std::make_tuple(a, l, i);
    auto it = memo.find(key);
    if (it == memo.end()) {
      const MPoly byPartition = expansion::thetaCap(m, l, i, kN);
      const bool same = byPartition == expansion::thetaCapFromSeries(m, l, i, kN);
      it = memo.emplace(key, std::make_pair(byPartition, same)).first;
    }
    if (!it->second.second) {
      out.fail("Theta^(" + std::to_string(l) + ")_" + std::to_string(i) + " a=" + std::to_string(a) +
               ": partition and series forms differ");
      continue;
    }
    if (!thetas.count(a)) thetas[a] = expansion::thetaSeries(m, kN);
    const auto point = randomPoint(rng, a - 1);
    Series th = one(kN + 1);
    for (int k = 2; k <= kN; ++k) th[k] = thetas[a][k].eval(point);
    if (power(th, l)[i] != it->second.first.eval(point)) {
      out.fail("Theta^(" + std::to_string(l) + ")_" + std::to_string(i) + " a=" + std::to_string(a) +
               ": numeric power disagrees");
      continue;
    }
    out.pass();
  }
  return out;
}

Outcome reparamBackSubstitution(std::uint64_t seed, int casesPerA) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int a = 2; a <= 4; ++a) {
    for (int n = 0; n < casesPerA; ++n) {
      const ReparamCase c = randomReparamCase(rng, a);
      const auto r = series::reparamSolve(c.model, c.cN, c.cN1, c.smax, c.K);
      if (!series::backSubstitutionResidual(r, c.cN, c.cN1).isZero()) {
        out.fail("a=" + std::to_string(a) + ": library residual nonzero");
        continue;
      }
      // Independent check: (1+w)^a + sum c_k(N+1) u^k (1+w)^{a-k} = 1 + sum c_k(N) u^k.
      const int nu = c.smax + 1;
      Bi w = biZero(nu, c.K);
      w[0][0] = Rational(1);
      for (int i = 2; i <= c.smax; ++i) {
        const TSeries wi = i <= a ? r.deltaPrimeAt(i) * Rational(-1, a) : r.epsilonAt(i);
        biAdd(w, i, wi);
      }
      Bi lhs = biPow(w, a);
      for (int k = 2; k <= a; ++k) {
        Bi ck = biZero(nu, c.K);
        biAdd(ck, k, c.cN1[k - 2]);
        const Bi term = biMul(ck, biPow(w, a - k));
        for (int i = 0; i < nu; ++i)
          for (int p = 0; p < c.K; ++p) lhs[i][p] += term[i][p];
      }
      Bi rhs = biZero(nu, c.K);
      rhs[0][0] = Rational(1);
      for (int k = 2; k <= a; ++k) biAdd(rhs, k, c.cN[k - 2]);
      if (lhs != rhs) {
        out.fail("a=" + std::to_string(a) + " K=" + std::to_string(c.K) + ": oracle identity fails");
        continue;
      }
      out.pass();
    }
  }
  return out;
}

Outcome reparamAudit(std::uint64_t seed, int casesPerA) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int a = 2; a <= 4; ++a) {
    for (int n = 0; n < casesPerA; ++n) {
      const ReparamCase c = randomReparamCase(rng, a);
      const auto r = series::reparamSolve(c.model, c.cN, c.cN1, c.smax, c.K);
      const auto report = series::orderBoundAudit(r, c.deltas);
      bool ok = report.passed();
      // Recompute the bounds here from the raw orders.
      auto od = [&](int j) { return static_cast<long>(c.deltas[j - 2].ord()); };
      for (int i = 2; i <= a && ok; ++i) {
        long m = od(i) - i;
        for (int j = 2; j <= i - 2; ++j) m = std::min(m, od(j) - j);
        ok = r.deltaPrimeAt(i).ord() >= clampedBound(i + m, c.K);
      }
      long mAll = od(2) - 2;
      for (int j = 3; j <= a; ++j) mAll = std::min(mAll, od(j) - j);
      for (int i = a + 1; i <= c.smax && ok; ++i) ok = r.epsilonAt(i).ord() >= clampedBound(i + mAll, c.K);
      if (!ok) {
        out.fail("a=" + std::to_string(a) + ": order bound violated");
        continue;
      }
      out.pass();
    }
  }
  return out;
}

Outcome reparamPm(std::uint64_t seed, int casesPerA) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int a = 2; a <= 4; ++a) {
    for (int n = 0; n < casesPerA; ++n) {
      const int b = a + 1;
      expansion::SigmaModel sm{LocalModel::make(a, b), {}};
      const int gLen = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int k = 0; k < gLen; ++k) sm.g.push_back(randomRational(rng, 4, 3));
      const int L = b + gLen;
      ReparamCase c = randomReparamCase(rng, a);
      // Keep the case inside the window where the identity is testable.
      c.smax = L + std::uniform_int_distribution<int>(1, 3)(rng);
      const auto v = series::pmIdentityCheck(sm, c.cN, c.cN1, c.smax, c.K);
      if (v == series::PmVerdict::kInconclusive) {
        ++out.skipped;
        continue;
      }
      if (v != series::PmVerdict::kTrue) {
        out.fail("a=" + std::to_string(a) + " K=" + std::to_string(c.K) + ": pm identity false");
        continue;
      }
      out.pass();
    }
  }
  return out;
}

namespace {

// Checks one finished run step by step against the closure and the
// preservation statements.
void auditRun(const lifting::LiftProblem& problem, const lifting::LiftRun& run, Outcome& out, const std::string& tag) {
  const LocalModel& m = problem.model();
  const int K = problem.modulus();
  const int d = problem.d();
  if (!run.closed()) return out.fail(tag + ": final residual open");
  const int expectedSteps = std::max(0, K - d * (m.b + 1) - 1);
  if (static_cast<int>(run.history.size()) - 1 != expectedSteps)
    return out.fail(tag + ": " + std::to_string(run.history.size() - 1) + " steps, expected " +
                    std::to_string(expectedSteps));
  for (std::size_t k = 0; k < run.history.size(); ++k) {
    const auto& state = run.history[k];
    if (state.order != static_cast<int>(k) + 1) return out.fail(tag + ": order does not advance by one");
    for (int j = 1; j <= m.a - 1; ++j) {
      const int need = std::min(d * (m.b + j) + state.order, K);
      if (problem.residual(state, j).ord() < need)
        return out.fail(tag + ": equation " + std::to_string(j) + " open at order " + std::to_string(state.order));
    }
    if (k == 0) continue;
    const auto& prev = run.history[k - 1];
    for (int i = 2; i <= m.a; ++i) {
      if ((state.c[i - 2] - prev.c[i - 2]).ord() < d * i + prev.order)
        return out.fail(tag + ": c_" + std::to_string(i) + " changed below t^" + std::to_string(d * i + prev.order));
    }
  }
  out.pass();
}

std::vector<Rational> randomWitness(std::mt19937_64& rng, const LocalModel& m) {
  for (;;) {
    auto p = randomPoint(rng, m.a - 1);
    const auto jac = evaluate(expansion::jacBarMatrix(m), std::span<const Rational>(p));
    if (invert(jac)) return p;
  }
}

}  // namespace

Outcome liftSinglePoint(std::uint64_t seed, int a, int b, int runs) {
  std::mt19937_64 rng(seed);
  const LocalModel m = LocalModel::make(a, b);
  Outcome out;
  for (int r = 0; r < runs; ++r) {
    const int d = 1;
    const int K = d * (b + 1) + 6;
    const auto witness = randomWitness(rng, m);
    const auto provider = lifting::randomProvider(m, d, 3, rng);
    const lifting::LiftProblem problem(m, witness, K, d, provider);
    auditRun(problem, lifting::liftRun(problem), out, "(" + std::to_string(a) + "," + std::to_string(b) + ") run " +
                                                          std::to_string(r));
  }
  return out;
}

Outcome liftTwoPoint(std::uint64_t seed, int runs) {
  std::mt19937_64 rng(seed);
  const auto config = lifting::SingularConfig::make({LocalModel::make(2, 3), LocalModel::make(2, 5)});
  const auto w = lifting::computeWeights(config);
  Outcome out;
  for (int r = 0; r < runs; ++r) {
    const int K = 20;
    std::vector<lifting::LiftProblem> problems;
    for (int j = 1; j <= config.size(); ++j) {
      const LocalModel& m = config.at(j);
      const int d = static_cast<int>(w.d[j - 1]);
      problems.emplace_back(m, randomWitness(rng, m), K, d, lifting::randomProvider(m, d, 2, rng));
    }
    const auto run = lifting::liftRunMulti(config, problems);
    bool closed = true;
    for (int j = 1; j <= config.size(); ++j) {
      for (const auto& e : lifting::residualReport(problems[j - 1], run.states[j - 1])) closed = closed && e.ok;
      closed = closed && !problems[j - 1].canStep(run.states[j - 1]);
    }
    if (!run.auditPassed() || run.audit.empty()) {
      out.fail("two-point run " + std::to_string(r) + ": audit failed");
    } else if (!closed) {
      out.fail("two-point run " + std::to_string(r) + ": not closed at K");
    } else {
      out.pass();
    }
  }
  return out;
}

}  // namespace equigen::testing
