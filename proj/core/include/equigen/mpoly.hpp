#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equigen/rational.hpp"

namespace equigen {

// Ordered variable names with integer weights. The coefficient variables
// c_k (and their doubled copies ct_k) carry weight k; auxiliary variables
// carry weight 0.
class VarSet {
 public:
  VarSet(std::vector<std::string> names, std::vector<int> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UsageError when the variable is unknown.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// c2..ca.
VarSetPtr coefficientVars(int a);
// c2..ca followed by ct2..cta (the fixed point c-tilde).
VarSetPtr doubledVars(int a);
// base variables followed by one weight-0 auxiliary variable.
VarSetPtr withAuxiliary(const VarSet& base, std::string name = "y");

using Exponents = std::vector<int>;

struct Term {
  Exponents exponents;
  Rational coefficient;
};

// Degree-reverse-lexicographic comparison on raw exponents: true when a is
// strictly greater than b.
bool grevlexGreater(const Exponents& a, const Exponents& b);

// Result of a weighted-degree query.
struct WeightedDegree {
  enum class Kind { kZero, kHomogeneous, kInhomogeneous };
  Kind kind = Kind::kZero;
  int degree = 0;

  bool homogeneous() const { return kind != Kind::kInhomogeneous; }
  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

// Sparse multivariate polynomial over the rationals. Terms are kept sorted
// in descending grevlex order with no zero coefficients, so structural
// equality is mathematical equality.
class MPoly {
 public:
  explicit MPoly(VarSetPtr vars);

  static MPoly constant(VarSetPtr vars, const Rational& value);
  static MPoly variable(VarSetPtr vars, std::string_view name, int power = 1);
  static MPoly variable(VarSetPtr vars, std::size_t index, int power = 1);
  static MPoly monomial(VarSetPtr vars, Exponents exponents, const Rational& coefficient);
  // Combines like terms, drops zeros and sorts.
  static MPoly fromTerms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& varsPtr() const { return vars_; }
  const VarSet& vars() const { return *vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t termCount() const { return terms_.size(); }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantTerm() const;
  const Term& leadingTerm() const { return terms_.front(); }
  // Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Exponents& exponents) const;
  int totalDegree() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MPoly operator*(const Rational& lhs, MPoly rhs) { return rhs *= lhs; }
  MPoly operator-() const;

  MPoly pow(int exponent) const;
  MPoly diff(std::string_view var) const;
  MPoly diff(std::size_t varIndex) const;

  Rational eval(std::span<const Rational> point) const;
  Rational eval(const std::map<std::string, Rational>& point) const;

  // Ring homomorphism sending variable i to images[i]; every image must
  // live over `target`.
  MPoly substitute(const VarSetPtr& target, std::span<const MPoly> images) const;
  // Re-expresses the polynomial over a variable set that contains all of
  // this polynomial's variable names (by name).
  MPoly embedInto(const VarSetPtr& target) const;

  WeightedDegree weightedDegree() const;

  // Canonical text form, e.g. "-3/16*c2^2*c3 + 3/4*c3*c4".
  std::string toString() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void requireSameVars(const MPoly& other, const char* op) const;

  VarSetPtr vars_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

// Evaluates p at a point in an arbitrary commutative ring R. `lift` maps a
// Rational into R and `one` is the multiplicative identity.
template <class R, class Lift>
R evaluateIn(const MPoly& p, std::span<const R> point, const R& zero, const R& one, Lift lift) {
  std::vector<std::vector<R>> powers(point.size());
  R result = zero;
  for (const Term& term : p.terms()) {
    R value = lift(term.coefficient);
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      const int e = term.exponents[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(one);
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[i]);
      value = value * cache[e];
    }
    result = result + value;
  }
  return result;
}

}  // namespace equigen
