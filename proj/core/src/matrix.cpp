#include "equigen/matrix.hpp"

#include "equigen/errors.hpp"

namespace equigen {

MPoly divideExact(const MPoly& p, const MPoly& q) {
  if (q.isZero()) throw UsageError("divideExact: division by zero polynomial");
  const VarSetPtr& vars = p.varsPtr();
  const Term& lead = q.leadingTerm();
  MPoly rest = p;
  std::vector<Term> quotient;
  while (!rest.isZero()) {
    const Term& t = rest.leadingTerm();
    Exponents e(t.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = t.exponents[i] - lead.exponents[i];
      if (e[i] < 0) throw UsageError("divideExact: divisor does not divide dividend");
    }
    const Rational c = t.coefficient / lead.coefficient;
    quotient.push_back(Term{e, c});
    rest -= MPoly::monomial(vars, std::move(e), c) * q;
  }
  return MPoly::fromTerms(vars, std::move(quotient));
}

MPoly detBareiss(const PolyMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input) {
    if (row.size() != n) throw UsageError("detBareiss: matrix is not square");
  }
  if (n == 0) throw UsageError("detBareiss: empty matrix");
  const VarSetPtr vars = input[0][0].varsPtr();
  PolyMatrix m = input;
  MPoly previous = MPoly::constant(vars, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].isZero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].isZero()) ++swap;
      if (swap == n) return MPoly(vars);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divideExact(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      }
    }
    previous = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

std::optional<RationalMatrix> invert(const RationalMatrix& input) {
  const std::size_t n = input.size();
  RationalMatrix a = input;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw UsageError("invert: matrix is not square");
    inv[i][i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].isZero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].isZero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(a.size(), std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw UsageError("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].isZero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& p : row) r.push_back(p.eval(point));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace equigen
