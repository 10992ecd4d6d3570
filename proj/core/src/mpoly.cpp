#include "equigen/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "equigen/errors.hpp"

namespace equigen {

VarSet::VarSet(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw UsageError("VarSet: names and weights differ in length");
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!seen.insert(names_[i]).second) throw UsageError("VarSet: duplicate variable '" + names_[i] + "'");
    if (weights_[i] < 0) throw UsageError("VarSet: negative weight for '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UsageError("unknown variable '" + std::string(name) + "'");
}

VarSetPtr coefficientVars(int a) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int k = 2; k <= a; ++k) {
    names.push_back("c" + std::to_string(k));
    weights.push_back(k);
  }
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

VarSetPtr doubledVars(int a) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int k = 2; k <= a; ++k) {
    names.push_back("c" + std::to_string(k));
    weights.push_back(k);
  }
  for (int k = 2; k <= a; ++k) {
    names.push_back("ct" + std::to_string(k));
    weights.push_back(k);
  }
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

VarSetPtr withAuxiliary(const VarSet& base, std::string name) {
  auto names = base.names();
  auto weights = base.weights();
  names.push_back(std::move(name));
  weights.push_back(0);
  return std::make_shared<const VarSet>(std::move(names), std::move(weights));
}

bool grevlexGreater(const Exponents& a, const Exponents& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

struct GrevlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const { return grevlexGreater(a, b); }
};

using TermMap = std::map<Exponents, Rational, GrevlexDesc>;

std::vector<Term> flatten(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exps, coeff] : acc) {
    if (!coeff.isZero()) out.push_back(Term{exps, std::move(coeff)});
  }
  return out;
}

}  // namespace

MPoly::MPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("MPoly: null variable set");
}

MPoly MPoly::constant(VarSetPtr vars, const Rational& value) {
  MPoly p(std::move(vars));
  if (!value.isZero()) p.terms_.push_back(Term{Exponents(p.vars_->size(), 0), value});
  return p;
}

MPoly MPoly::variable(VarSetPtr vars, std::string_view name, int power) {
  const std::size_t i = vars->index(name);
  return variable(std::move(vars), i, power);
}

MPoly MPoly::variable(VarSetPtr vars, std::size_t index, int power) {
  if (index >= vars->size()) throw UsageError("MPoly::variable: index out of range");
  if (power < 0) throw UsageError("MPoly::variable: negative power");
  Exponents e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), std::move(e), Rational(1));
}

MPoly MPoly::monomial(VarSetPtr vars, Exponents exponents, const Rational& coefficient) {
  MPoly p(std::move(vars));
  if (exponents.size() != p.vars_->size()) throw UsageError("MPoly::monomial: exponent length mismatch");
  for (int e : exponents) {
    if (e < 0) throw UsageError("MPoly::monomial: negative exponent");
  }
  if (!coefficient.isZero()) p.terms_.push_back(Term{std::move(exponents), coefficient});
  return p;
}

MPoly MPoly::fromTerms(VarSetPtr vars, std::vector<Term> terms) {
  MPoly p(std::move(vars));
  TermMap acc;
  for (auto& t : terms) {
    if (t.exponents.size() != p.vars_->size()) throw UsageError("MPoly::fromTerms: exponent length mismatch");
    acc[std::move(t.exponents)] += t.coefficient;
  }
  p.terms_ = flatten(std::move(acc));
  return p;
}

bool MPoly::isConstant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                                            [](int e) { return e == 0; }));
}

Rational MPoly::constantTerm() const { return coefficient(Exponents(vars_->size(), 0)); }

Rational MPoly::coefficient(const Exponents& exponents) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                             [](const Term& t, const Exponents& e) { return grevlexGreater(t.exponents, e); });
  if (it != terms_.end() && it->exponents == exponents) return it->coefficient;
  return Rational(0);
}

int MPoly::totalDegree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::requireSameVars(const MPoly& other, const char* op) const {
  if (vars_ != other.vars_ && !(*vars_ == *other.vars_))
    throw UsageError(std::string("MPoly ") + op + ": variable sets differ");
}

namespace {

// Merge two descending term lists; sign = +1 or -1 applied to rhs.
std::vector<Term> merge(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
  std::vector<Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && grevlexGreater(lhs[i].exponents, rhs[j].exponents))) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || grevlexGreater(rhs[j].exponents, lhs[i].exponents)) {
      out.push_back(Term{rhs[j].exponents, sign > 0 ? rhs[j].coefficient : -rhs[j].coefficient});
      ++j;
    } else {
      Rational c = sign > 0 ? lhs[i].coefficient + rhs[j].coefficient : lhs[i].coefficient - rhs[j].coefficient;
      if (!c.isZero()) out.push_back(Term{lhs[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& rhs) {
  requireSameVars(rhs, "add");
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  requireSameVars(rhs, "subtract");
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  lhs.requireSameVars(rhs, "multiply");
  MPoly out(lhs.vars_);
  if (lhs.isZero() || rhs.isZero()) return out;
  TermMap acc;
  Exponents e(lhs.vars_->size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exponents[k] + b.exponents[k];
      acc[e] += a.coefficient * b.coefficient;
    }
  }
  out.terms_ = flatten(std::move(acc));
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

MPoly MPoly::pow(int exponent) const {
  if (exponent < 0) throw UsageError("MPoly::pow: negative exponent");
  MPoly result = constant(vars_, Rational(1));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

MPoly MPoly::diff(std::string_view var) const { return diff(vars_->index(var)); }

MPoly MPoly::diff(std::size_t varIndex) const {
  if (varIndex >= vars_->size()) throw UsageError("MPoly::diff: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.exponents[varIndex];
    if (e == 0) continue;
    Term d{t.exponents, t.coefficient * Rational(e)};
    d.exponents[varIndex] = e - 1;
    out.push_back(std::move(d));
  }
  // Lowering one exponent by one keeps distinct monomials distinct but may
  // reorder them under grevlex.
  return fromTerms(vars_, std::move(out));
}

Rational MPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw UsageError("MPoly::eval: point does not assign every variable");
  return evaluateIn<Rational>(*this, point, Rational(0), Rational(1), [](const Rational& r) { return r; });
}

Rational MPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  values.reserve(vars_->size());
  for (const auto& name : vars_->names()) {
    auto it = point.find(name);
    if (it == point.end()) throw UsageError("MPoly::eval: missing assignment for '" + name + "'");
    values.push_back(it->second);
  }
  return eval(values);
}

MPoly MPoly::substitute(const VarSetPtr& target, std::span<const MPoly> images) const {
  if (images.size() != vars_->size()) throw UsageError("MPoly::substitute: wrong number of images");
  for (const auto& img : images) {
    if (!(img.vars() == *target)) throw UsageError("MPoly::substitute: image over a different variable set");
  }
  return evaluateIn<MPoly>(*this, images, MPoly(target), MPoly::constant(target, Rational(1)),
                           [&](const Rational& r) { return MPoly::constant(target, r); });
}

MPoly MPoly::embedInto(const VarSetPtr& target) const {
  std::vector<std::size_t> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) map[i] = target->index(vars_->name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) e[map[i]] = t.exponents[i];
    out.push_back(Term{std::move(e), t.coefficient});
  }
  return fromTerms(target, std::move(out));
}

WeightedDegree MPoly::weightedDegree() const {
  if (terms_.empty()) return {WeightedDegree::Kind::kZero, 0};
  int degree = -1;
  for (const auto& t : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) w += t.exponents[i] * vars_->weight(i);
    if (degree < 0) {
      degree = w;
    } else if (w != degree) {
      return {WeightedDegree::Kind::kInhomogeneous, 0};
    }
  }
  return {WeightedDegree::Kind::kHomogeneous, degree};
}

std::string MPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = t.coefficient.abs();
    std::ostringstream mono;
    bool firstVar = true;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!firstVar) mono << "*";
      firstVar = false;
      mono << vars_->name(i);
      if (t.exponents[i] > 1) mono << "^" << t.exponents[i];
    }
    if (firstVar) {
      os << mag;
    } else if (mag.isOne()) {
      os << mono.str();
    } else {
      os << mag << "*" << mono.str();
    }
  }
  return os.str();
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(a.vars() == b.vars()) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.toString(); }

}  // namespace equigen
