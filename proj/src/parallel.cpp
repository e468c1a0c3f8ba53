#include "frobmean/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace frobmean {

unsigned default_workers() {
  if (const char* env = std::getenv("FROBMEAN_WORKERS")) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace frobmean
