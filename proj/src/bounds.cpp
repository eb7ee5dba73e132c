#include "cayleycodes/bounds.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace cayleycodes {

Bounds bounds_from_env(const char* env_value) {
  Bounds b;
  if (env_value == nullptr) return b;
  std::size_t value = 0;
  const char* end = env_value + std::strlen(env_value);
  auto [ptr, ec] = std::from_chars(env_value, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return b;
  b.subgroup_max_order = value;
  b.automorphism_max_order = value;
  b.enumerate_max_order = value;
  b.generic_max_order = value;
  return b;
}

const Bounds& default_bounds() {
  static const Bounds bounds = bounds_from_env(std::getenv("CAYLEYCODES_MAX_ORDER"));
  return bounds;
}

}  // namespace cayleycodes
