#pragma once

#include <vector>

#include "equigen/mpoly.hpp"

namespace equigen {

// Truncated power series sum_{m=0}^{order} p_m u^m with polynomial
// coefficients. The expansion module uses u = 1/s (or 1/S).
class PolySeries {
 public:
  PolySeries(VarSetPtr vars, int order);
  static PolySeries one(VarSetPtr vars, int order);

  int order() const { return order_; }
  const VarSetPtr& varsPtr() const { return vars_; }
  const MPoly& operator[](int m) const { return coeffs_[m]; }
  MPoly& operator[](int m) { return coeffs_[m]; }

  PolySeries& operator+=(const PolySeries& rhs);
  PolySeries& operator-=(const PolySeries& rhs);
  friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
  PolySeries operator*(const MPoly& scalar) const;

  // Multiplies by u^shift, dropping terms beyond the order.
  PolySeries shifted(int shift) const;

  // (this)^alpha via the binomial series; requires constant term 1.
  PolySeries pow(const Rational& alpha) const;

  bool isZero() const;
  friend bool operator==(const PolySeries& a, const PolySeries& b);

 private:
  void requireCompatible(const PolySeries& other) const;

  VarSetPtr vars_;
  int order_;
  std::vector<MPoly> coeffs_;
};

}  // namespace equigen
