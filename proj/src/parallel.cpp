#include "qconvex/parallel.hpp"

#include <cstdlib>

namespace qconvex {

Parallelism Parallelism::from_env() {
  if (const char* env = std::getenv("QCONVEX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return {static_cast<unsigned>(v)};
  }
  return {std::max(1U, std::thread::hardware_concurrency())};
}

}  // namespace qconvex
