#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equigen/expansion.hpp"
#include "equigen/tseries.hpp"

namespace equigen::series {

using expansion::LocalModel;
using expansion::SigmaModel;

// s(N+1) = s - (1/a) sum_{i=2}^a delta'_i s^{1-i} + sum_{i>a} eps_i s^{1-i}.
struct ReparamResult {
  int a = 2;
  int smax = 2;
  int modulus = 1;
  std::vector<TSeries> deltaPrime;  // delta'_2 .. delta'_a
  std::vector<TSeries> epsilon;     // eps_{a+1} .. eps_{smax}
  // s(N+1) = s (1 + sum_i w[i] s^{-i}); w[0] = w[1] = 0.
  std::vector<TSeries> w;

  const TSeries& deltaPrimeAt(int i) const { return deltaPrime.at(i - 2); }
  const TSeries& epsilonAt(int i) const { return epsilon.at(i - a - 1); }
};

// Solves s(N+1)^a + sum c_k(N+1) s(N+1)^{a-k} = s^a + sum c_k(N) s^{a-k}
// through s^{a-smax}. cN and cN1 hold c_2..c_a mod t^K. Requires
// ord(c_i(N)) >= d*i and ord(c_i(N+1) - c_i(N)) >= d*i + 1.
ReparamResult reparamSolve(const LocalModel& model, const std::vector<TSeries>& cN, const std::vector<TSeries>& cN1,
                           int smax, int modulus, int d = 1);

// Left side minus right side of the defining identity over the window
// [a - smax, a], recomputed from the delta'/eps table.
LaurentSlice backSubstitutionResidual(const ReparamResult& result, const std::vector<TSeries>& cN,
                                      const std::vector<TSeries>& cN1);

struct AuditEntry {
  std::string coefficient;  // "delta'_4", "eps_7"
  int ord = 0;
  int bound = 0;
  // The bound reaches the truncation, so only the zero series can be seen.
  bool vacuous = false;
  bool ok = true;
  int margin = 0;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  bool passed() const;
  std::vector<std::string> violations() const;
};

// Checks ord(delta'_i) >= i + min_{j in {2..i-2, i}} (ord(delta_j) - j) and
// ord(eps_i) >= i + min_{2<=j<=a} (ord(delta_j) - j).
AuditReport orderBoundAudit(const ReparamResult& result, const std::vector<TSeries>& deltas);

enum class PmVerdict { kTrue, kFalse, kInconclusive };

std::string_view toString(PmVerdict v);

// Compares the regular-part difference with the singular-part difference
// over the s-window [L - smax, L], L = b + |g|. Inconclusive when the
// window misses the singular part (smax <= L) or when K <= b + 1.
PmVerdict pmIdentityCheck(const SigmaModel& model, const std::vector<TSeries>& cN, const std::vector<TSeries>& cN1,
                          int smax, int modulus, int d = 1);

}  // namespace equigen::series
