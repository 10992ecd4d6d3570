#include "equigen_cli/scan.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace equigen::cli {

namespace {

using groebner::Verdict;

std::optional<Verdict> verdictFromText(const std::string& text) {
  for (Verdict v : {Verdict::kHolds, Verdict::kFails, Verdict::kTimeout}) {
    if (groebner::toString(v) == text) return v;
  }
  return std::nullopt;
}

std::string generatorDigest(const std::vector<MPoly>& gens) {
  std::string text;
  for (const auto& g : gens) text += g.toString() + ";";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

}  // namespace

nlohmann::json cacheKey(const groebner::LocalModel& model, int i) {
  return {{"a", model.a}, {"b", model.b}, {"i", i}, {"engine", kEngineVersion}, {"order", "grevlex"}};
}

IndexResult decideIndex(const groebner::LocalModel& model, int i, const groebner::Budget& budget,
                        const ResultCache* cache) {
  const nlohmann::json key = cacheKey(model, i);
  if (cache) {
    if (auto hit = cache->load(key)) {
      auto verdict = verdictFromText(hit->value("verdict", ""));
      auto bigF = verdictFromText(hit->value("bigFForm", ""));
      auto simplified = verdictFromText(hit->value("simplifiedForm", ""));
      if (verdict && bigF && simplified) {
        IndexResult r;
        r.cached = true;
        r.detail.verdict = *verdict;
        r.detail.bigFForm = *bigF;
        r.detail.simplifiedForm = *simplified;
        r.detail.bigFSeconds = hit->value("bigFSeconds", 0.0);
        r.detail.simplifiedSeconds = hit->value("simplifiedSeconds", 0.0);
        return r;
      }
    }
  }
  IndexResult r;
  r.detail = groebner::checkGIndex(model, i, budget);
  if (cache && r.detail.verdict != Verdict::kTimeout) {
    cache->store(key, {{"verdict", groebner::toString(r.detail.verdict)},
                       {"bigFForm", groebner::toString(r.detail.bigFForm)},
                       {"simplifiedForm", groebner::toString(r.detail.simplifiedForm)},
                       {"bigFSeconds", r.detail.bigFSeconds},
                       {"simplifiedSeconds", r.detail.simplifiedSeconds},
                       {"hashes",
                        {{"bigF", generatorDigest(groebner::bigFGenerators(model, i))},
                         {"simplified", generatorDigest(groebner::simplifiedGenerators(model, i))}}}});
  }
  return r;
}

Verdict aggregate(const std::map<int, groebner::IndexDetail>& detail) {
  bool timeout = false;
  for (const auto& [i, d] : detail) {
    if (d.verdict == Verdict::kFails) return Verdict::kFails;
    if (d.verdict == Verdict::kTimeout) timeout = true;
  }
  return timeout ? Verdict::kTimeout : Verdict::kHolds;
}

std::vector<ScanRow> runScan(const ScanOptions& options) {
  struct Job {
    std::size_t row;
    int i;
  };
  std::vector<ScanRow> rows;
  std::vector<Job> jobs;
  for (int a = options.aLo; a <= options.aHi; ++a) {
    for (int b = std::max(options.bLo, a + 1); b <= options.bHi; ++b) {
      if (b % a == 0) continue;
      ScanRow row{groebner::LocalModel::make(a, b), {}};
      row.verdict.model = row.model;
      for (int i = 1; i <= a - 1; ++i) jobs.push_back(Job{rows.size(), i});
      rows.push_back(std::move(row));
    }
  }

  std::vector<groebner::IndexDetail> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::size_t n = next++; n < jobs.size(); n = next++) {
      try {
        const Job& job = jobs[n];
        results[n] = decideIndex(rows[job.row].model, job.i, groebner::Budget{options.budgetSecs}, options.cache).detail;
      } catch (...) {
        std::lock_guard lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t n = 0; n < jobs.size(); ++n) {
    ScanRow& row = rows[jobs[n].row];
    row.verdict.detail[jobs[n].i] = results[n];
    row.verdict.seconds += results[n].bigFSeconds + results[n].simplifiedSeconds;
  }
  for (auto& row : rows) row.verdict.overall = aggregate(row.verdict.detail);
  return rows;
}

}  // namespace equigen::cli
