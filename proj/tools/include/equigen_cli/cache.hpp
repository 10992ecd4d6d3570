#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace equigen::cli {

std::uint64_t fnv1a(std::string_view bytes);

// Content-addressed store: the key is a canonical JSON object, the file name
// its FNV-1a digest. Entries are written to a temporary file and renamed
// into place so concurrent readers never see a partial entry.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path pathFor(const nlohmann::json& key) const;

  // nullopt on miss, on unreadable entries and on digest collisions.
  std::optional<nlohmann::json> load(const nlohmann::json& key) const;
  void store(const nlohmann::json& key, const nlohmann::json& value) const;

 private:
  std::filesystem::path dir_;
};

// --cache-dir wins, then EQUIGEN_CACHE_DIR; nullopt disables caching.
std::optional<std::filesystem::path> resolveCacheDir(const std::string& flag);

}  // namespace equigen::cli
