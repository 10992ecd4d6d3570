#pragma once

#include <map>
#include <optional>
#include <vector>

#include "equigen/matrix.hpp"
#include "equigen/mpoly.hpp"
#include "equigen/poly_series.hpp"

// Generators for the coefficient polynomials of a deformed branch
// (z, w) = (S^a, S^b + ...), S^a = s^a + c_2 s^{a-2} + ... + c_a.
//
// Every polynomial here lives over coefficientVars(a) (c2..ca with weight
// k on c_k) unless stated otherwise, and is weighted homogeneous.
namespace equigen::expansion {

// The local model (z, w) = (s^a, s^b + ...): 2 <= a < b, a does not divide b.
struct LocalModel {
  int a = 2;
  int b = 3;

  // Validates the invariants, throws UsageError otherwise.
  static LocalModel make(int a, int b);
  friend bool operator==(const LocalModel&, const LocalModel&) = default;
};

// part size k -> multiplicity lambda(k); only nonzero multiplicities stored.
using Partition = std::map<int, int>;

// All partitions of n into parts in [lo, hi]; hi = nullopt means unbounded.
// n = 0 yields the single empty partition, n < 0 yields none.
std::vector<Partition> partitions(int n, int lo, std::optional<int> hi = std::nullopt);

// prod_{i=0}^{sum beta - 1} (alpha - i) / prod beta_j!
Rational genMultinomial(const Rational& alpha, const Partition& lambda);

// Coefficient of s^{-m} in (1 + sum_{k=2}^a c_k s^{-k})^{betaNum/a}.
// fCoeff(model, b, b + j) is f^{(b)}_{b+j}.
MPoly fCoeff(const LocalModel& model, int betaNum, int m);

// gamma_i = fCoeff(model, 1, i): S = s (1 + sum gamma_i s^{-i}).
MPoly gammaCoeff(const LocalModel& model, int i);

// theta_m for the inverse parameter change s = S (1 + sum theta_m S^{-m}).
// The result has nmax + 1 entries indexed by m; entries 0 and 1 are zero.
std::vector<MPoly> thetaSeries(const LocalModel& model, int nmax);

// Capital Theta^{(l)}_i via the multinomial sum over partitions of i:
// s^l = S^l sum_i Theta_i S^{-i}.
MPoly thetaCap(const LocalModel& model, int l, int i, int nmax);

// Same quantity, read off the truncated series power (1 + sum theta_m u^m)^l.
MPoly thetaCapFromSeries(const LocalModel& model, int l, int i, int nmax);

// F_{-n} = sum_{i=-n}^{-1} Theta^{(i)}_{i+n} f^{(b)}_{b-i}, for 1 <= n <= a-1.
MPoly bigF(const LocalModel& model, int n);

// fbar_{b+j} over doubledVars(a); the ct variables are the fixed point.
MPoly fBar(const LocalModel& model, int j);

// (a-1) x (a-1) matrix of d fbar_{b+j} / d c_k with ct identified with c.
PolyMatrix jacBarMatrix(const LocalModel& model);
MPoly jacBar(const LocalModel& model);

// Local model plus higher coefficients g0 = (g_1, g_2, ...) of
// S^{b+1}, S^{b+2}, ... in the second coordinate.
struct SigmaModel {
  LocalModel model;
  std::vector<Rational> g;
};

// sigma_{-l}: coefficient of s^l in S^b + sum_r g_r S^{b+r}, truncated to
// weighted degree <= tmax.
MPoly sigma(const SigmaModel& model, int l, int tmax);

}  // namespace equigen::expansion
