#pragma once

#include <cstddef>

namespace cayleycodes {

// Size limits for the exhaustive routines. The environment variable
// CAYLEYCODES_MAX_ORDER, when set to a positive integer, replaces every
// order limit below (the PCP exhaustive-mode thresholds are mode switches and
// are left alone).
struct Bounds {
  std::size_t subgroup_max_order = 64;
  std::size_t automorphism_max_order = 24;
  std::size_t enumerate_max_order = 24;
  std::size_t generic_max_order = 32;
  std::size_t generic_max_index = 16;
  std::size_t pcp_exhaustive_order = 12;
  std::size_t pcp_exhaustive_orbits = 14;
};

// Defaults with the environment override applied. Read once per process.
const Bounds& default_bounds();

// Defaults with the override taken from `env_value` (nullptr means unset).
Bounds bounds_from_env(const char* env_value);

}  // namespace cayleycodes
