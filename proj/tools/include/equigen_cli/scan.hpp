#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equigen/conditions.hpp"
#include "equigen_cli/cache.hpp"

namespace equigen::cli {

// Bumped whenever a change can alter a (G) verdict.
inline constexpr const char* kEngineVersion = "equigen-gb-1";

struct IndexResult {
  groebner::IndexDetail detail;
  bool cached = false;
};

nlohmann::json cacheKey(const groebner::LocalModel& model, int i);

// Cached (G) decision for one index. Timeouts are never stored.
IndexResult decideIndex(const groebner::LocalModel& model, int i, const groebner::Budget& budget,
                        const ResultCache* cache);

struct ScanRow {
  groebner::LocalModel model;
  groebner::GVerdict verdict;
};

struct ScanOptions {
  int aLo = 2, aHi = 4;
  int bLo = 3, bHi = 9;
  double budgetSecs = 120.0;  // per (a, b, i) job
  int jobs = 1;
  const ResultCache* cache = nullptr;
};

// Rows in (a, b) order; cells with a | b are skipped.
std::vector<ScanRow> runScan(const ScanOptions& options);

// Aggregate over indices: any fails wins, then any timeout.
groebner::Verdict aggregate(const std::map<int, groebner::IndexDetail>& detail);

}  // namespace equigen::cli
