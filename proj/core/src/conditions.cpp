#include "equigen/conditions.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "equigen/errors.hpp"

namespace equigen::groebner {

namespace {

void requireIndex(const LocalModel& model, int i) {
  if (i < 1 || i > model.a - 1)
    throw UsageError("index " + std::to_string(i) + " outside [1, " + std::to_string(model.a - 1) + "]");
}

void requirePoint(const LocalModel& model, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != model.a - 1)
    throw UsageError("point must have " + std::to_string(model.a - 1) + " coordinates (got " +
                     std::to_string(point.size()) + ")");
}

MPoly fAbove(const LocalModel& model, int j) { return expansion::fCoeff(model, model.b, model.b + j); }

Verdict fromMembership(Membership m) {
  switch (m) {
    case Membership::kMember:
      return Verdict::kFails;
    case Membership::kNotMember:
      return Verdict::kHolds;
    case Membership::kTimeout:
      break;
  }
  return Verdict::kTimeout;
}

double secondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "holds";
    case Verdict::kFails:
      return "fails";
    case Verdict::kTimeout:
      break;
  }
  return "timeout";
}

bool checkT(const LocalModel& model, std::span<const Rational> point) {
  requirePoint(model, point);
  if (model.a == 2) return !point[0].isZero();
  return !expansion::jacBar(model).eval(point).isZero();
}

std::vector<MPoly> bigFGenerators(const LocalModel& model, int i) {
  requireIndex(model, i);
  std::vector<MPoly> gens;
  for (int n = 1; n <= model.a - 1; ++n) {
    if (n != i) gens.push_back(expansion::bigF(model, n));
  }
  return gens;
}

std::vector<MPoly> simplifiedGenerators(const LocalModel& model, int i) {
  requireIndex(model, i);
  const int top = model.a - 1;
  std::vector<MPoly> gens;
  for (int m = 1; m < i; ++m) gens.push_back(fAbove(model, m));

  // kappa_n = Theta^{(-i)}_{n-i} - sum_{m=i+1}^{n-1} Theta^{(-m)}_{n-m} kappa_m
  const VarSetPtr vars = coefficientVars(model.a);
  const MPoly fi = fAbove(model, i);
  std::map<int, MPoly> kappa;
  for (int n = i + 1; n <= top; ++n) {
    MPoly k = expansion::thetaCap(model, -i, n - i, n - i);
    for (int m = i + 1; m <= n - 1; ++m) k -= expansion::thetaCap(model, -m, n - m, n - m) * kappa.at(m);
    kappa.emplace(n, k);
    gens.push_back(fAbove(model, n) + k * fi);
  }
  return gens;
}

IndexDetail checkGIndex(const LocalModel& model, int i, const Budget& budget) {
  requireIndex(model, i);
  const VarSetPtr vars = coefficientVars(model.a);
  const MPoly jac = expansion::jacBar(model);
  IndexDetail detail;

  auto start = std::chrono::steady_clock::now();
  const Ideal bigFIdeal(vars, bigFGenerators(model, i));
  detail.bigFForm = fromMembership(radicalMember(expansion::bigF(model, i) * jac, bigFIdeal, budget));
  detail.bigFSeconds = secondsSince(start);

  Budget rest = budget;
  rest.seconds = std::max(0.0, budget.seconds - detail.bigFSeconds);
  start = std::chrono::steady_clock::now();
  const Ideal simplified(vars, simplifiedGenerators(model, i));
  detail.simplifiedForm = fromMembership(radicalMember(fAbove(model, i) * jac, simplified, rest));
  detail.simplifiedSeconds = secondsSince(start);

  if (detail.bigFForm == Verdict::kTimeout || detail.simplifiedForm == Verdict::kTimeout) {
    detail.verdict = Verdict::kTimeout;
  } else if (detail.bigFForm != detail.simplifiedForm) {
    throw InternalConsistencyError("condition (G) at (a,b)=(" + std::to_string(model.a) + "," +
                                   std::to_string(model.b) + "), index " + std::to_string(i) +
                                   ": F-form says " + std::string(toString(detail.bigFForm)) +
                                   " but f-form says " + std::string(toString(detail.simplifiedForm)));
  } else {
    detail.verdict = detail.bigFForm;
  }
  return detail;
}

GVerdict checkG(const LocalModel& model, const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  GVerdict result;
  result.model = model;
  bool anyFails = false;
  bool anyTimeout = false;
  for (int i = 1; i <= model.a - 1; ++i) {
    Budget rest = budget;
    rest.seconds = std::max(0.0, budget.seconds - secondsSince(start));
    const IndexDetail detail = checkGIndex(model, i, rest);
    anyFails = anyFails || detail.verdict == Verdict::kFails;
    anyTimeout = anyTimeout || detail.verdict == Verdict::kTimeout;
    result.detail.emplace(i, detail);
  }
  result.overall = anyFails ? Verdict::kFails : anyTimeout ? Verdict::kTimeout : Verdict::kHolds;
  result.seconds = secondsSince(start);
  return result;
}

bool witnessVerify(const LocalModel& model, int i, std::span<const Rational> point) {
  requireIndex(model, i);
  requirePoint(model, point);
  for (int n = 1; n <= model.a - 1; ++n) {
    const bool zero = expansion::bigF(model, n).eval(point).isZero();
    if (n == i ? zero : !zero) return false;
  }
  return checkT(model, point);
}

}  // namespace equigen::groebner
