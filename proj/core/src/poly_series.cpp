#include "equigen/poly_series.hpp"

#include "equigen/errors.hpp"

namespace equigen {

PolySeries::PolySeries(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {
  if (order < 0) throw UsageError("PolySeries: negative order");
  coeffs_.assign(order + 1, MPoly(vars_));
}

PolySeries PolySeries::one(VarSetPtr vars, int order) {
  PolySeries s(vars, order);
  s.coeffs_[0] = MPoly::constant(vars, Rational(1));
  return s;
}

void PolySeries::requireCompatible(const PolySeries& other) const {
  if (order_ != other.order_) throw UsageError("PolySeries: truncation orders differ");
  if (!(*vars_ == *other.vars_)) throw UsageError("PolySeries: variable sets differ");
}

PolySeries& PolySeries::operator+=(const PolySeries& rhs) {
  requireCompatible(rhs);
  for (int m = 0; m <= order_; ++m) coeffs_[m] += rhs.coeffs_[m];
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& rhs) {
  requireCompatible(rhs);
  for (int m = 0; m <= order_; ++m) coeffs_[m] -= rhs.coeffs_[m];
  return *this;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  a.requireCompatible(b);
  PolySeries out(a.vars_, a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].isZero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

PolySeries PolySeries::operator*(const MPoly& scalar) const {
  PolySeries out(vars_, order_);
  for (int m = 0; m <= order_; ++m) out.coeffs_[m] = coeffs_[m] * scalar;
  return out;
}

PolySeries PolySeries::shifted(int shift) const {
  PolySeries out(vars_, order_);
  for (int m = 0; m + shift <= order_; ++m) {
    if (m + shift >= 0) out.coeffs_[m + shift] = coeffs_[m];
  }
  return out;
}

PolySeries PolySeries::pow(const Rational& alpha) const {
  if (!(coeffs_[0] == MPoly::constant(vars_, Rational(1))))
    throw UsageError("PolySeries::pow: constant term must be 1");
  PolySeries x = *this;
  x.coeffs_[0] = MPoly(vars_);
  PolySeries result = one(vars_, order_);
  PolySeries power = one(vars_, order_);
  for (long k = 1; k <= order_; ++k) {
    power = power * x;
    if (power.isZero()) break;
    const Rational c = binomial(alpha, k);
    if (c.isZero()) break;
    for (int m = 0; m <= order_; ++m) result.coeffs_[m] += power.coeffs_[m] * c;
  }
  return result;
}

bool PolySeries::isZero() const {
  for (const auto& c : coeffs_) {
    if (!c.isZero()) return false;
  }
  return true;
}

bool operator==(const PolySeries& a, const PolySeries& b) {
  if (a.order_ != b.order_) return false;
  for (int m = 0; m <= a.order_; ++m) {
    if (!(a.coeffs_[m] == b.coeffs_[m])) return false;
  }
  return true;
}

}  // namespace equigen
