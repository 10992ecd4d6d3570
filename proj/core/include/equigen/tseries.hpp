#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equigen/rational.hpp"

namespace equigen::series {

// Element of Q[[t]]/t^K. Coefficients past the last nonzero one are not
// stored; the zero series has ord() == K.
class TSeries {
 public:
  explicit TSeries(int modulus);
  TSeries(int modulus, std::vector<Rational> coefficients);

  static TSeries constant(int modulus, const Rational& value);
  static TSeries monomial(int modulus, int exponent, const Rational& coefficient);

  int modulus() const { return modulus_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  void setCoefficient(int i, const Rational& value);

  int ord() const;
  bool isZero() const { return coeffs_.empty(); }

  // Multiplication by t^n, n >= 0.
  TSeries shifted(int n) const;
  // Drops every coefficient at index >= n.
  TSeries truncated(int n) const;

  TSeries& operator+=(const TSeries& rhs);
  TSeries& operator-=(const TSeries& rhs);
  TSeries& operator*=(const Rational& scalar);
  TSeries operator-() const;

  friend TSeries operator+(TSeries lhs, const TSeries& rhs) { return lhs += rhs; }
  friend TSeries operator-(TSeries lhs, const TSeries& rhs) { return lhs -= rhs; }
  friend TSeries operator*(const TSeries& lhs, const TSeries& rhs);
  friend TSeries operator*(TSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend TSeries operator*(const Rational& lhs, TSeries rhs) { return rhs *= lhs; }
  friend bool operator==(const TSeries&, const TSeries&) = default;

  std::string toString() const;

 private:
  void requireSameModulus(const TSeries& other, const char* op) const;
  void trim();

  int modulus_;
  std::vector<Rational> coeffs_;
};

inline int tOrd(const TSeries& x) { return x.ord(); }

// Coefficients B_0..B_n of (1 + sum_{j>=1} A_j u^j)^alpha, where A[0] is
// ignored and taken to be 1. Entries of A past its end are zero.
std::vector<TSeries> powerSeries(const std::vector<TSeries>& a, const Rational& alpha, int n, int modulus);

// Finite window [lo, hi] of a Laurent series in s with TSeries coefficients.
class LaurentSlice {
 public:
  LaurentSlice(int lo, int hi, int modulus);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int modulus() const { return modulus_; }

  // Zero outside the stored support; throws UsageError outside [lo, hi].
  TSeries at(int exponent) const;
  void set(int exponent, TSeries value);
  // Adds value at exponent; silently ignores exponents outside the window.
  void accumulate(int exponent, const TSeries& value);

  const std::map<int, TSeries>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  LaurentSlice& operator+=(const LaurentSlice& rhs);
  LaurentSlice& operator-=(const LaurentSlice& rhs);
  friend LaurentSlice operator+(LaurentSlice lhs, const LaurentSlice& rhs) { return lhs += rhs; }
  friend LaurentSlice operator-(LaurentSlice lhs, const LaurentSlice& rhs) { return lhs -= rhs; }
  friend bool operator==(const LaurentSlice&, const LaurentSlice&) = default;

 private:
  void requireCompatible(const LaurentSlice& other) const;

  int lo_;
  int hi_;
  int modulus_;
  std::map<int, TSeries> terms_;
};

// (regular, singular): exponents >= 0 and < 0 respectively.
std::pair<LaurentSlice, LaurentSlice> regularize(const LaurentSlice& h);

// Coefficient of s^{-1}; throws UsageError if -1 is outside the window.
TSeries residueAt(const LaurentSlice& h);

}  // namespace equigen::series
