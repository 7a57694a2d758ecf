#include "test_support.hpp"

#include <cstdlib>
#include <cstring>

namespace gforms::testkit {

namespace {
std::uint64_t g_seed = 20240611;
}

std::uint64_t seed() { return g_seed; }
void set_seed(std::uint64_t s) { g_seed = s; }

int consume_seed_flag(int argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::strtoull(argv[i] + 7, nullptr, 10);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      argv[out++] = argv[i];
    }
  }
  argv[out] = nullptr;
  return out;
}

}  // namespace gforms::testkit
