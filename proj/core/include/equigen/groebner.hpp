#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "equigen/mpoly.hpp"

namespace equigen::groebner {

enum class OrderKind { kGrevlex, kLex };

// Monomial order over the variable order of the polynomial's VarSet.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGrevlex;

  // Strict comparison: true when a > b.
  bool greater(const Exponents& a, const Exponents& b) const;
  static MonomialOrder grevlex() { return {OrderKind::kGrevlex}; }
  static MonomialOrder lex() { return {OrderKind::kLex}; }
};

// Wall-clock plus S-pair cap. Exhausting either yields a timeout result.
struct Budget {
  double seconds = 120.0;
  std::size_t maxPairs = std::numeric_limits<std::size_t>::max();
};

class Ideal {
 public:
  // Zero generators are dropped and duplicates removed. An empty list
  // denotes the zero ideal; `vars` names the ambient ring in that case.
  Ideal(VarSetPtr vars, std::vector<MPoly> generators, MonomialOrder order = {});

  const VarSetPtr& varsPtr() const { return vars_; }
  const std::vector<MPoly>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

 private:
  VarSetPtr vars_;
  std::vector<MPoly> generators_;
  MonomialOrder order_;
};

struct GroebnerResult {
  bool timedOut = false;
  // Reduced basis: monic, sorted by descending leading monomial. Empty on
  // timeout or for the zero ideal.
  std::vector<MPoly> basis;
  std::size_t pairsReduced = 0;
  std::size_t pairsSkipped = 0;
  double seconds = 0.0;

  bool isUnit() const;
};

// Leading exponent vector of p under `order` (p must be nonzero).
Exponents leadingExponents(const MPoly& p, const MonomialOrder& order);

// Remainder of multivariate division of p by `basis`: no monomial of the
// result is divisible by a leading monomial of the basis, and p - result
// lies in the ideal generated by the basis.
MPoly normalForm(const MPoly& p, std::span<const MPoly> basis, const MonomialOrder& order = {});

GroebnerResult buchberger(const Ideal& ideal, const Budget& budget = {});

enum class Membership { kMember, kNotMember, kTimeout };

// p in rad(I) iff 1 in I + (1 - y p) over the ring extended by a fresh y.
Membership radicalMember(const MPoly& p, const Ideal& ideal, const Budget& budget = {});

}  // namespace equigen::groebner
