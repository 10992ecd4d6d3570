#include "equigen/expansion.hpp"

#include <string>

#include "equigen/errors.hpp"

namespace equigen::expansion {

LocalModel LocalModel::make(int a, int b) {
  if (a < 2) throw UsageError("local model: multiplicity a must be >= 2 (got " + std::to_string(a) + ")");
  if (b <= a) throw UsageError("local model: need b > a (got a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  if (b % a == 0)
    throw UsageError("local model: b=" + std::to_string(b) + " is a multiple of a=" + std::to_string(a) +
                     "; such a branch can be reparameterized so that b is not a multiple of a");
  return LocalModel{a, b};
}

namespace {

void partitionsRec(int n, int lo, int maxPart, Partition& current, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int k = std::min(maxPart, n); k >= lo; --k) {
    ++current[k];
    partitionsRec(n - k, lo, k, current, out);
    if (--current[k] == 0) current.erase(k);
  }
}

MPoly monomialOf(const VarSetPtr& vars, const Partition& lambda, const Rational& coefficient) {
  Exponents e(vars->size(), 0);
  for (const auto& [k, mult] : lambda) e[k - 2] = mult;
  return MPoly::monomial(vars, std::move(e), coefficient);
}

// Theta^{(l)}_i from a precomputed theta list (theta.size() > i).
MPoly thetaCapWith(const VarSetPtr& vars, const std::vector<MPoly>& theta, int l, int i) {
  MPoly result(vars);
  for (const Partition& lambda : partitions(i, 2, i)) {
    MPoly term = MPoly::constant(vars, genMultinomial(Rational(l), lambda));
    for (const auto& [k, mult] : lambda) term *= theta[k].pow(mult);
    result += term;
  }
  return result;
}

}  // namespace

std::vector<Partition> partitions(int n, int lo, std::optional<int> hi) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (lo < 1) throw UsageError("partitions: lower bound must be positive");
  const int cap = hi ? std::min(*hi, n) : n;
  Partition current;
  if (n == 0) {
    out.push_back(current);
    return out;
  }
  if (cap < lo) return out;
  partitionsRec(n, lo, cap, current, out);
  return out;
}

Rational genMultinomial(const Rational& alpha, const Partition& lambda) {
  long total = 0;
  Rational denominator(1);
  for (const auto& [part, beta] : lambda) {
    total += beta;
    for (long f = 2; f <= beta; ++f) denominator *= Rational(f);
  }
  Rational numerator(1);
  for (long i = 0; i < total; ++i) numerator *= alpha - Rational(i);
  return numerator / denominator;
}

MPoly fCoeff(const LocalModel& model, int betaNum, int m) {
  const VarSetPtr vars = coefficientVars(model.a);
  MPoly result(vars);
  if (m < 0) return result;
  const Rational beta(betaNum, model.a);
  for (const Partition& lambda : partitions(m, 2, model.a)) {
    result += monomialOf(vars, lambda, genMultinomial(beta, lambda));
  }
  return result;
}

MPoly gammaCoeff(const LocalModel& model, int i) {
  if (i < 2) throw UsageError("gammaCoeff: index must be >= 2");
  return fCoeff(model, 1, i);
}

std::vector<MPoly> thetaSeries(const LocalModel& model, int nmax) {
  if (nmax < 2) throw UsageError("thetaSeries: nmax must be >= 2");
  const VarSetPtr vars = coefficientVars(model.a);
  std::vector<MPoly> gamma(nmax + 1, MPoly(vars));
  for (int i = 2; i <= nmax; ++i) gamma[i] = gammaCoeff(model, i);

  // A = s/S = 1 + sum theta_m u^m with u = 1/S satisfies
  //   A - 1 = -sum_{i>=2} gamma_i u^i A^{1-i};
  // the u^m coefficient of the right side only involves theta_k, k < m.
  std::vector<MPoly> theta(nmax + 1, MPoly(vars));
  for (int m = 2; m <= nmax; ++m) {
    PolySeries a = PolySeries::one(vars, m);
    for (int k = 2; k < m; ++k) a[k] = theta[k];
    MPoly coefficient(vars);
    for (int i = 2; i <= m; ++i) {
      if (gamma[i].isZero()) continue;
      const PolySeries power = a.pow(Rational(1 - i));
      coefficient -= gamma[i] * power[m - i];
    }
    theta[m] = coefficient;
  }
  return theta;
}

MPoly thetaCap(const LocalModel& model, int l, int i, int nmax) {
  if (i < 0 || i > nmax) throw UsageError("thetaCap: index outside [0, nmax]");
  const VarSetPtr vars = coefficientVars(model.a);
  if (i < 2) return MPoly::constant(vars, Rational(i == 0 ? 1 : 0));
  return thetaCapWith(vars, thetaSeries(model, i), l, i);
}

MPoly thetaCapFromSeries(const LocalModel& model, int l, int i, int nmax) {
  if (i < 0 || i > nmax) throw UsageError("thetaCapFromSeries: index outside [0, nmax]");
  const VarSetPtr vars = coefficientVars(model.a);
  if (i < 2) return MPoly::constant(vars, Rational(i == 0 ? 1 : 0));
  const std::vector<MPoly> theta = thetaSeries(model, i);
  PolySeries a = PolySeries::one(vars, i);
  for (int k = 2; k <= i; ++k) a[k] = theta[k];
  return a.pow(Rational(l))[i];
}

MPoly bigF(const LocalModel& model, int n) {
  if (n < 1 || n > model.a - 1) throw UsageError("bigF: n must lie in [1, a-1]");
  const VarSetPtr vars = coefficientVars(model.a);
  const std::vector<MPoly> theta = thetaSeries(model, std::max(n - 1, 2));
  MPoly result(vars);
  for (int i = -n; i <= -1; ++i) {
    const int index = i + n;
    if (index == 1) continue;  // Theta_1 = 0
    const MPoly cap = index == 0 ? MPoly::constant(vars, Rational(1)) : thetaCapWith(vars, theta, i, index);
    result += cap * fCoeff(model, model.b, model.b - i);
  }
  return result;
}

MPoly fBar(const LocalModel& model, int j) {
  const int a = model.a;
  if (j < 1 || j > a - 1) throw UsageError("fBar: j must lie in [1, a-1]");
  const VarSetPtr single = coefficientVars(a);
  const VarSetPtr vars = doubledVars(a);
  auto c = [&](int k) { return MPoly::variable(vars, static_cast<std::size_t>(k - 2)); };
  auto ct = [&](int k) { return MPoly::variable(vars, static_cast<std::size_t>(a - 1 + k - 2)); };

  std::vector<MPoly> toC, toCt;
  for (int k = 2; k <= a; ++k) {
    toC.push_back(c(k));
    toCt.push_back(ct(k));
  }
  auto fAt = [&](int m, const std::vector<MPoly>& images) {
    return fCoeff(model, model.b, m).substitute(vars, images);
  };

  MPoly result = fAt(model.b + j, toC);
  for (int k = 2; k <= j - 1; ++k) {
    const MPoly fTilde = fAt(model.b + j - k, toCt);
    result += (c(k) - ct(k)) * fTilde * Rational(j - k, a);
    for (int l = 2; l <= k - 2; ++l) {
      result -= (c(k - l) - ct(k - l)) * ct(l) * fTilde * (Rational(j - k, a) * Rational(a - l, a));
    }
  }
  return result;
}

PolyMatrix jacBarMatrix(const LocalModel& model) {
  const int a = model.a;
  const VarSetPtr single = coefficientVars(a);
  std::vector<MPoly> identify;
  for (int k = 2; k <= a; ++k) identify.push_back(MPoly::variable(single, static_cast<std::size_t>(k - 2)));
  for (int k = 2; k <= a; ++k) identify.push_back(MPoly::variable(single, static_cast<std::size_t>(k - 2)));

  PolyMatrix m;
  for (int j = 1; j <= a - 1; ++j) {
    const MPoly fb = fBar(model, j);
    std::vector<MPoly> row;
    for (int k = 2; k <= a; ++k) row.push_back(fb.diff(static_cast<std::size_t>(k - 2)).substitute(single, identify));
    m.push_back(std::move(row));
  }
  return m;
}

MPoly jacBar(const LocalModel& model) { return detBareiss(jacBarMatrix(model)); }

MPoly sigma(const SigmaModel& sm, int l, int tmax) {
  const LocalModel& model = sm.model;
  const VarSetPtr vars = coefficientVars(model.a);
  MPoly result(vars);
  for (std::size_t r = 0; r <= sm.g.size(); ++r) {
    const Rational weight = r == 0 ? Rational(1) : sm.g[r - 1];
    if (weight.isZero()) continue;
    const int exponent = model.b + static_cast<int>(r);
    const int m = exponent - l;
    if (m < 0 || m > tmax) continue;
    result += fCoeff(model, exponent, m) * weight;
  }
  return result;
}

}  // namespace equigen::expansion
