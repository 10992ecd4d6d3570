#include "oracles.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>

namespace equigen::testing {

namespace {
std::optional<std::uint64_t> g_seed;
}

std::uint64_t testSeed() {
  if (g_seed) return *g_seed;
  if (const char* env = std::getenv("EQUIGEN_SEED"); env && *env) return std::strtoull(env, nullptr, 10);
  return 20240611;
}

void setTestSeed(std::uint64_t seed) { g_seed = seed; }

int consumeSeedFlag(int argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      setTestSeed(std::strtoull(argv[i] + 7, nullptr, 10));
      continue;
    }
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      setTestSeed(std::strtoull(argv[++i], nullptr, 10));
      continue;
    }
    argv[out++] = argv[i];
  }
  return out;
}

}  // namespace equigen::testing
