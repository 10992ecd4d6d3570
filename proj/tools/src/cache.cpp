#include "equigen_cli/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace equigen::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::pathFor(const nlohmann::json& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key.dump())));
  return dir_ / name;
}

std::optional<nlohmann::json> ResultCache::load(const nlohmann::json& key) const {
  std::ifstream in(pathFor(key));
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.contains("key") || entry["key"] != key || !entry.contains("value"))
    return std::nullopt;
  return entry["value"];
}

void ResultCache::store(const nlohmann::json& key, const nlohmann::json& value) const {
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path target = pathFor(key);
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const std::filesystem::path temp = target.string() + suffix.str();
  {
    std::ofstream out(temp, std::ios::trunc);
    out << nlohmann::json{{"key", key}, {"value", value}}.dump(2) << "\n";
    if (!out) {
      std::filesystem::remove(temp);
      return;
    }
  }
  std::filesystem::rename(temp, target);
}

std::optional<std::filesystem::path> resolveCacheDir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("EQUIGEN_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace equigen::cli
