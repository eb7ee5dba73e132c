#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace cayleycodes {

// Evaluates body(i) for every i in [0, count) across OpenMP threads and
// returns the results in index order. If any call throws, the exception from
// the lowest index is rethrown after the loop.
template <class F>
auto parallel_map(std::size_t count, F&& body) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using Result = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      slots[i].emplace(body(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
auto serial_map(std::size_t count, F&& body) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(body(i));
  return out;
}

// Number of threads OpenMP would use for a parallel region (1 without OpenMP).
int worker_count();

}  // namespace cayleycodes
