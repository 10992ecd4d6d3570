#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "equigen/expansion.hpp"
#include "equigen/groebner.hpp"

namespace equigen::groebner {

using expansion::LocalModel;

enum class Verdict { kHolds, kFails, kTimeout };

std::string_view toString(Verdict v);

// Transversality at a point of (c2..ca). For a = 2 any nonzero c2 qualifies.
// Throws UsageError when the point has the wrong dimension.
bool checkT(const LocalModel& model, std::span<const Rational> point);

// Generators of (F_{-n} : n != i).
std::vector<MPoly> bigFGenerators(const LocalModel& model, int i);

// The same ideal after triangular elimination: f_{b+m} for m < i and
// f_{b+n} + kappa_n f_{b+i} for n > i.
std::vector<MPoly> simplifiedGenerators(const LocalModel& model, int i);

struct IndexDetail {
  Verdict verdict = Verdict::kTimeout;
  Verdict bigFForm = Verdict::kTimeout;
  Verdict simplifiedForm = Verdict::kTimeout;
  double bigFSeconds = 0.0;
  double simplifiedSeconds = 0.0;
};

// Both presentations are decided; a definite disagreement throws
// InternalConsistencyError. Either presentation timing out yields kTimeout.
IndexDetail checkGIndex(const LocalModel& model, int i, const Budget& budget = {});

struct GVerdict {
  LocalModel model;
  Verdict overall = Verdict::kTimeout;
  std::map<int, IndexDetail> detail;
  double seconds = 0.0;
};

// All indices 1..a-1 share one budget. A fails index makes the overall
// verdict fails even if later indices time out.
GVerdict checkG(const LocalModel& model, const Budget& budget = {});

// Exact check of a (G) witness for index i: F_{-n}(point) = 0 for n != i,
// F_{-i}(point) != 0 and (T) at point.
bool witnessVerify(const LocalModel& model, int i, std::span<const Rational> point);

}  // namespace equigen::groebner
