#include "equigen/verdict.hpp"

#include <algorithm>

#include "equigen/errors.hpp"

namespace equigen::lifting {

bool checkD(const SingularConfig& config, int j, long dimTwisted, long dimPlain) {
  const LocalModel& model = config.at(j);
  if (dimTwisted < 0 || dimPlain < 0) throw UsageError("condition (D): dimensions must be non-negative");
  return dimTwisted < dimPlain + model.a - 1;
}

std::string_view toString(Deformation d) {
  switch (d) {
    case Deformation::kDeforms:
      return "deforms";
    case Deformation::kDoesNotDeform:
      return "does_not_deform";
    case Deformation::kUnknown:
      break;
  }
  return "unknown";
}

VerdictReport deformVerdict(const VerdictInput& input) {
  const SingularConfig& config = input.config;
  for (const auto& [j, dims] : input.dims) config.at(j);
  for (const auto& [j, g] : input.gTable) {
    if (!(g.model == config.at(j)))
      throw UsageError("gTable entry for point " + std::to_string(j) + " was computed for (a,b)=(" +
                       std::to_string(g.model.a) + "," + std::to_string(g.model.b) + ")");
  }

  VerdictReport report;
  bool allDouble = true;
  for (int j = 1; j <= config.size(); ++j) {
    const LocalModel& model = config.at(j);
    allDouble = allDouble && model.a == 2;
    PointReport point;
    point.j = j;
    for (int k = 1; k <= model.a - 1; ++k) {
      if (inResidueSpan(config, input.sections, {{PairIndex{j, k}, Rational(1)}})) point.dedicatedOrders.push_back(k);
    }
    if (auto it = input.dims.find(j); it != input.dims.end())
      point.conditionD = checkD(config, j, it->second.twisted, it->second.plain);
    if (auto it = input.gTable.find(j); it != input.gTable.end()) point.conditionG = it->second.overall;
    report.points.push_back(std::move(point));
  }

  // Recipe for (l_1, ..., l_e): l_j = 1 unless 1 is a dedicated order, in
  // which case the smallest non-dedicated order.
  std::vector<int> certificate;
  bool certificateExists = true;
  for (const PointReport& p : report.points) {
    const int a = config.at(p.j).a;
    const auto& I = p.dedicatedOrders;
    if (I.empty() || I.front() > 1) {
      certificate.push_back(1);
      continue;
    }
    int l = 0;
    for (int k = 1; k <= a - 1 && l == 0; ++k) {
      if (!std::binary_search(I.begin(), I.end(), k)) l = k;
    }
    if (l == 0) {
      certificateExists = false;
      break;
    }
    certificate.push_back(l);
  }
  if (certificateExists) report.certificate = certificate;

  if (allDouble) {
    report.doublePointCriterion = true;
    for (const PointReport& p : report.points) {
      if (p.dedicatedOrders.empty()) {
        report.verdict = Deformation::kDeforms;
        report.reason = "no section has polar support exactly {p_" + std::to_string(p.j) + "}";
        return report;
      }
    }
    if (input.nbarNonzero) {
      report.verdict = Deformation::kDeforms;
      report.reason = "H^0(C, N_phi) is nonzero";
      return report;
    }
    report.verdict = Deformation::kDoesNotDeform;
    report.reason = "every point has a section with polar support exactly at it and H^0(C, N_phi) = 0";
    return report;
  }

  for (const PointReport& p : report.points) {
    if (!p.conditionD) {
      report.reason = "no dimensions supplied for point " + std::to_string(p.j);
      return report;
    }
    if (!*p.conditionD) {
      report.reason = "condition (D) fails at point " + std::to_string(p.j);
      return report;
    }
    if (!p.conditionG) {
      report.reason = "no (G) verdict supplied for point " + std::to_string(p.j);
      return report;
    }
    if (*p.conditionG != groebner::Verdict::kHolds) {
      report.reason = "condition (G) " + std::string(groebner::toString(*p.conditionG)) + " at point " +
                      std::to_string(p.j);
      return report;
    }
  }
  if (!report.certificate)
    throw UsageError("inconsistent input: (D) holds at every point but some point has every pole order dedicated");
  report.verdict = Deformation::kDeforms;
  report.reason = "(D) and (G) hold at every point";
  return report;
}

}  // namespace equigen::lifting
