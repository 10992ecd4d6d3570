#pragma once

#include <optional>
#include <vector>

#include "equigen/mpoly.hpp"

namespace equigen {

using PolyMatrix = std::vector<std::vector<MPoly>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact quotient p / q. Throws UsageError when q does not divide p.
MPoly divideExact(const MPoly& p, const MPoly& q);

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
MPoly detBareiss(const PolyMatrix& m);

// Inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

// Entry-wise evaluation at a point.
RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

}  // namespace equigen
