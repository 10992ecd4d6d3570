#include "equigen/reparam.hpp"

#include <algorithm>
#include <climits>

#include "equigen/errors.hpp"

namespace equigen::series {

namespace {

void requireCoefficients(const LocalModel& model, const std::vector<TSeries>& c, const char* name, int modulus) {
  if (static_cast<int>(c.size()) != model.a - 1)
    throw UsageError(std::string(name) + ": expected " + std::to_string(model.a - 1) + " series (c_2..c_a), got " +
                     std::to_string(c.size()));
  for (const auto& x : c) {
    if (x.modulus() != modulus) throw UsageError(std::string(name) + ": modulus differs from K");
  }
}

TSeries evalSeries(const MPoly& p, const std::vector<TSeries>& point, int modulus) {
  const TSeries zero(modulus);
  const TSeries one = TSeries::constant(modulus, Rational(1));
  return evaluateIn<TSeries>(p, std::span<const TSeries>(point), zero, one,
                             [&](const Rational& r) { return TSeries::constant(modulus, r); });
}

}  // namespace

ReparamResult reparamSolve(const LocalModel& model, const std::vector<TSeries>& cN, const std::vector<TSeries>& cN1,
                           int smax, int modulus, int d) {
  const int a = model.a;
  requireCoefficients(model, cN, "c(N)", modulus);
  requireCoefficients(model, cN1, "c(N+1)", modulus);
  if (smax < a) throw UsageError("reparamSolve: smax must be >= a");
  if (d < 1) throw UsageError("reparamSolve: weight d must be positive");
  for (int k = 2; k <= a; ++k) {
    const TSeries& c = cN[k - 2];
    if (c.ord() < d * k)
      throw UsageError("reparamSolve: ord(c_" + std::to_string(k) + "(N)) = " + std::to_string(c.ord()) +
                       " is below " + std::to_string(d * k));
    const TSeries delta = cN1[k - 2] - c;
    if (delta.ord() < d * k + 1)
      throw UsageError("reparamSolve: ord(delta_" + std::to_string(k) + ") = " + std::to_string(delta.ord()) +
                       " is below " + std::to_string(d * k + 1));
  }

  // Powers (1+w)^m for m = a and m = a-k, built with Miller's recurrence.
  // The newest coefficient w_n enters B^{(m)}_n only as m*w_n, so it is
  // first computed with w_n = 0 and corrected once w_n is known.
  std::vector<TSeries> w(smax + 1, TSeries(modulus));
  std::vector<std::vector<TSeries>> powers(a + 1);
  for (int m = 0; m <= a; ++m) powers[m].push_back(TSeries::constant(modulus, Rational(1)));

  auto nextCoefficient = [&](int m, int n) {
    TSeries acc(modulus);
    const Rational alpha(m);
    for (int k = 1; k < n; ++k) {
      if (w[k].isZero() || powers[m][n - k].isZero()) continue;
      acc += (w[k] * powers[m][n - k]) * ((alpha + Rational(1)) * Rational(k) - Rational(n));
    }
    return acc * Rational(1, n);
  };

  for (int n = 1; n <= smax; ++n) {
    for (int m = 0; m <= a; ++m) powers[m].push_back(nextCoefficient(m, n));
    TSeries lhs = powers[a][n];
    for (int k = 2; k <= a && k <= n; ++k) lhs += cN1[k - 2] * powers[a - k][n - k];
    TSeries rhs(modulus);
    if (n >= 2 && n <= a) rhs = cN[n - 2];
    w[n] = (rhs - lhs) * Rational(1, a);
    for (int m = 0; m <= a; ++m) powers[m][n] += w[n] * Rational(m);
  }

  ReparamResult result;
  result.a = a;
  result.smax = smax;
  result.modulus = modulus;
  for (int i = 2; i <= a; ++i) result.deltaPrime.push_back(w[i] * Rational(-a));
  for (int i = a + 1; i <= smax; ++i) result.epsilon.push_back(w[i]);
  result.w = std::move(w);
  return result;
}

LaurentSlice backSubstitutionResidual(const ReparamResult& result, const std::vector<TSeries>& cN,
                                      const std::vector<TSeries>& cN1) {
  const int a = result.a;
  const int K = result.modulus;
  std::vector<TSeries> w(result.smax + 1, TSeries(K));
  for (int i = 2; i <= a; ++i) w[i] = result.deltaPrimeAt(i) * Rational(-1, a);
  for (int i = a + 1; i <= result.smax; ++i) w[i] = result.epsilonAt(i);

  LaurentSlice residual(a - result.smax, a, K);
  auto addTerm = [&](const TSeries& coefficient, int m, const Rational& sign) {
    // coefficient * s(N+1)^m = coefficient * s^m (1+w)^m
    const std::vector<TSeries> p = powerSeries(w, Rational(m), result.smax, K);
    for (int j = 0; j <= result.smax; ++j) residual.accumulate(m - j, coefficient * p[j] * sign);
  };
  const TSeries one = TSeries::constant(K, Rational(1));
  addTerm(one, a, Rational(1));
  for (int k = 2; k <= a; ++k) addTerm(cN1[k - 2], a - k, Rational(1));
  residual.accumulate(a, -one);
  for (int k = 2; k <= a; ++k) residual.accumulate(a - k, -cN[k - 2]);
  return residual;
}

bool AuditReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.ok; });
}

std::vector<std::string> AuditReport::violations() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (!e.ok)
      out.push_back(e.coefficient + ": ord " + std::to_string(e.ord) + " < bound " + std::to_string(e.bound));
  }
  return out;
}

AuditReport orderBoundAudit(const ReparamResult& result, const std::vector<TSeries>& deltas) {
  const int a = result.a;
  const int K = result.modulus;
  if (static_cast<int>(deltas.size()) != a - 1) throw UsageError("orderBoundAudit: expected a-1 deltas");
  auto excess = [&](int j) { return deltas[j - 2].ord() - j; };

  AuditReport report;
  auto record = [&](std::string name, const TSeries& value, int bound) {
    AuditEntry e;
    e.coefficient = std::move(name);
    e.ord = value.ord();
    e.bound = bound;
    e.vacuous = bound >= K;
    e.ok = e.ord >= std::min(bound, K);
    e.margin = e.ord - std::min(bound, K);
    report.entries.push_back(std::move(e));
  };

  for (int i = 2; i <= a; ++i) {
    int m = excess(i);
    for (int j = 2; j <= i - 2; ++j) m = std::min(m, excess(j));
    record("delta'_" + std::to_string(i), result.deltaPrimeAt(i), i + m);
  }
  int global = INT_MAX;
  for (int j = 2; j <= a; ++j) global = std::min(global, excess(j));
  for (int i = a + 1; i <= result.smax; ++i) record("eps_" + std::to_string(i), result.epsilonAt(i), i + global);
  return report;
}

std::string_view toString(PmVerdict v) {
  switch (v) {
    case PmVerdict::kTrue:
      return "true";
    case PmVerdict::kFalse:
      return "false";
    case PmVerdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

PmVerdict pmIdentityCheck(const SigmaModel& model, const std::vector<TSeries>& cN, const std::vector<TSeries>& cN1,
                          int smax, int modulus, int d) {
  const int b = model.model.b;
  const int top = b + static_cast<int>(model.g.size());
  if (smax <= top || modulus <= b + 1) return PmVerdict::kInconclusive;
  const ReparamResult rp = reparamSolve(model.model, cN, cN1, smax, modulus, d);

  const int lo = top - smax;
  LaurentSlice regular(lo, top, modulus);
  LaurentSlice singular(lo, top, modulus);
  for (int l = lo; l <= top; ++l) {
    const MPoly sigma = expansion::sigma(model, l, INT_MAX);
    if (sigma.isZero()) continue;
    const TSeries before = evalSeries(sigma, cN, modulus);
    const TSeries after = evalSeries(sigma, cN1, modulus);
    // sigma(c(N+1)) s(N+1)^l = sigma(c(N+1)) s^l (1+w)^l
    LaurentSlice moved(lo, top, modulus);
    const std::vector<TSeries> p = powerSeries(rp.w, Rational(l), l - lo, modulus);
    for (int j = 0; j <= l - lo; ++j) moved.accumulate(l - j, after * p[j]);
    LaurentSlice fixed(lo, top, modulus);
    fixed.accumulate(l, before);
    if (l >= 0) {
      regular += moved - fixed;
    } else {
      singular += fixed - moved;
    }
  }
  return regular == singular ? PmVerdict::kTrue : PmVerdict::kFalse;
}

}  // namespace equigen::series
