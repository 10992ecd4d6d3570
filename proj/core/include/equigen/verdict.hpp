#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equigen/conditions.hpp"
#include "equigen/lifting.hpp"

namespace equigen::lifting {

// dim H^0(phi^* omega_X((a_j - 1) p_j)) < dim H^0(phi^* omega_X) + a_j - 1.
bool checkD(const SingularConfig& config, int j, long dimTwisted, long dimPlain);

struct PointDims {
  long twisted = 0;
  long plain = 0;
};

enum class Deformation { kDeforms, kDoesNotDeform, kUnknown };

std::string_view toString(Deformation d);

struct VerdictInput {
  SingularConfig config;
  std::vector<SectionProfile> sections;
  std::map<int, PointDims> dims;                   // by point index
  std::map<int, groebner::GVerdict> gTable;        // by point index
  bool nbarNonzero = false;                        // H^0(C, N_phi) != 0
};

struct PointReport {
  int j = 1;
  std::optional<bool> conditionD;                  // nullopt without dims
  std::optional<groebner::Verdict> conditionG;     // nullopt without a gTable entry
  std::vector<int> dedicatedOrders;                // I_j: k with e_(j,k) in the span
};

struct VerdictReport {
  Deformation verdict = Deformation::kUnknown;
  std::string reason;
  bool doublePointCriterion = false;
  std::vector<PointReport> points;
  // (l_1, ..., l_e) built by the recipe of the nonemptiness argument.
  std::optional<std::vector<int>> certificate;
};

// All-double-point configurations use the iff criterion (never kUnknown).
// Otherwise kDeforms needs (D) and (G) at every point; anything else is
// kUnknown. gTable entries must match the configured local models.
VerdictReport deformVerdict(const VerdictInput& input);

}  // namespace equigen::lifting
