#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cayleycodes {

struct SuiteOptions {
  std::optional<std::size_t> max_order;  // suite default when absent
  std::uint64_t seed = 20240601;
};

struct SuiteResult {
  std::string name;
  std::size_t max_order = 0;
  std::size_t groups = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool passed() const { return failures == 0 && checks > 0; }
};

const std::vector<std::string>& suite_names();

// Throws ParseError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace cayleycodes
