#include "equigen/tseries.hpp"

#include <algorithm>
#include <sstream>

#include "equigen/errors.hpp"

namespace equigen::series {

TSeries::TSeries(int modulus) : modulus_(modulus) {
  if (modulus < 1) throw UsageError("TSeries: modulus must be positive");
}

TSeries::TSeries(int modulus, std::vector<Rational> coefficients) : TSeries(modulus) {
  if (static_cast<int>(coefficients.size()) > modulus) coefficients.resize(modulus);
  coeffs_ = std::move(coefficients);
  trim();
}

TSeries TSeries::constant(int modulus, const Rational& value) { return monomial(modulus, 0, value); }

TSeries TSeries::monomial(int modulus, int exponent, const Rational& coefficient) {
  TSeries out(modulus);
  out.setCoefficient(exponent, coefficient);
  return out;
}

Rational TSeries::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

void TSeries::setCoefficient(int i, const Rational& value) {
  if (i < 0) throw UsageError("TSeries: negative exponent");
  if (i >= modulus_) return;
  if (i >= static_cast<int>(coeffs_.size())) {
    if (value.isZero()) return;
    coeffs_.resize(i + 1, Rational(0));
  }
  coeffs_[i] = value;
  trim();
}

int TSeries::ord() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].isZero()) return static_cast<int>(i);
  }
  return modulus_;
}

TSeries TSeries::shifted(int n) const {
  if (n < 0) throw UsageError("TSeries: negative shift");
  if (isZero()) return *this;
  std::vector<Rational> c(n, Rational(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return TSeries(modulus_, std::move(c));
}

TSeries TSeries::truncated(int n) const {
  TSeries out = *this;
  if (n < static_cast<int>(out.coeffs_.size())) out.coeffs_.resize(std::max(n, 0));
  out.trim();
  return out;
}

void TSeries::requireSameModulus(const TSeries& other, const char* op) const {
  if (modulus_ != other.modulus_)
    throw UsageError(std::string("TSeries ") + op + ": modulus mismatch (" + std::to_string(modulus_) + " vs " +
                     std::to_string(other.modulus_) + ")");
}

void TSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

TSeries& TSeries::operator+=(const TSeries& rhs) {
  requireSameModulus(rhs, "+");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& rhs) {
  requireSameModulus(rhs, "-");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

TSeries& TSeries::operator*=(const Rational& scalar) {
  if (scalar.isZero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TSeries TSeries::operator-() const {
  TSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TSeries operator*(const TSeries& lhs, const TSeries& rhs) {
  lhs.requireSameModulus(rhs, "*");
  TSeries out(lhs.modulus_);
  if (lhs.isZero() || rhs.isZero()) return out;
  const std::size_t n = std::min<std::size_t>(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, lhs.modulus_);
  out.coeffs_.assign(n, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size() && i < n; ++i) {
    if (lhs.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size() && i + j < n; ++j) {
      if (rhs.coeffs_[j].isZero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

std::string TSeries::toString() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    const bool negative = coeffs_[i].sign() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << (negative ? -coeffs_[i] : coeffs_[i]).toString();
    if (i > 0) os << "*t^" << i;
  }
  if (first) os << "0";
  os << " mod t^" << modulus_;
  return os.str();
}

std::vector<TSeries> powerSeries(const std::vector<TSeries>& a, const Rational& alpha, int n, int modulus) {
  // Miller's recurrence: B_m = (1/m) sum_{k=1}^m ((alpha+1)k - m) A_k B_{m-k}.
  std::vector<TSeries> out;
  out.reserve(n + 1);
  out.push_back(TSeries::constant(modulus, Rational(1)));
  for (int m = 1; m <= n; ++m) {
    TSeries acc(modulus);
    for (int k = 1; k <= m && k < static_cast<int>(a.size()); ++k) {
      if (a[k].isZero() || out[m - k].isZero()) continue;
      acc += (a[k] * out[m - k]) * ((alpha + Rational(1)) * Rational(k) - Rational(m));
    }
    out.push_back(acc * Rational(1, m));
  }
  return out;
}

LaurentSlice::LaurentSlice(int lo, int hi, int modulus) : lo_(lo), hi_(hi), modulus_(modulus) {
  if (lo > hi) throw UsageError("LaurentSlice: empty window");
  if (modulus < 1) throw UsageError("LaurentSlice: modulus must be positive");
}

TSeries LaurentSlice::at(int exponent) const {
  if (exponent < lo_ || exponent > hi_)
    throw UsageError("LaurentSlice: exponent " + std::to_string(exponent) + " outside window [" +
                     std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  auto it = terms_.find(exponent);
  return it == terms_.end() ? TSeries(modulus_) : it->second;
}

void LaurentSlice::set(int exponent, TSeries value) {
  if (exponent < lo_ || exponent > hi_) throw UsageError("LaurentSlice: exponent outside window");
  if (value.modulus() != modulus_) throw UsageError("LaurentSlice: modulus mismatch");
  if (value.isZero()) {
    terms_.erase(exponent);
  } else {
    terms_.insert_or_assign(exponent, std::move(value));
  }
}

void LaurentSlice::accumulate(int exponent, const TSeries& value) {
  if (exponent < lo_ || exponent > hi_ || value.isZero()) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    set(exponent, value);
    return;
  }
  it->second += value;
  if (it->second.isZero()) terms_.erase(it);
}

void LaurentSlice::requireCompatible(const LaurentSlice& other) const {
  if (lo_ != other.lo_ || hi_ != other.hi_ || modulus_ != other.modulus_)
    throw UsageError("LaurentSlice: window or modulus mismatch");
}

LaurentSlice& LaurentSlice::operator+=(const LaurentSlice& rhs) {
  requireCompatible(rhs);
  for (const auto& [e, v] : rhs.terms_) accumulate(e, v);
  return *this;
}

LaurentSlice& LaurentSlice::operator-=(const LaurentSlice& rhs) {
  requireCompatible(rhs);
  for (const auto& [e, v] : rhs.terms_) accumulate(e, -v);
  return *this;
}

std::pair<LaurentSlice, LaurentSlice> regularize(const LaurentSlice& h) {
  LaurentSlice regular(h.lo(), h.hi(), h.modulus());
  LaurentSlice singular(h.lo(), h.hi(), h.modulus());
  for (const auto& [e, v] : h.terms()) (e >= 0 ? regular : singular).set(e, v);
  return {std::move(regular), std::move(singular)};
}

TSeries residueAt(const LaurentSlice& h) { return h.at(-1); }

}  // namespace equigen::series
