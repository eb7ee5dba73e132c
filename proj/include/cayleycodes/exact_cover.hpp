#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cayleycodes {

// Exact cover over the universe {0..universe-1}: choose rows that hit every
// item exactly once. Rows are item lists; empty rows are never selected.
class ExactCover {
 public:
  ExactCover(std::size_t universe, std::vector<std::vector<std::size_t>> rows);

  std::size_t universe() const { return universe_; }
  std::size_t row_count() const { return rows_.size(); }

  // All covers as sorted row-index lists, the list sorted lexicographically.
  // Branches on the item with the fewest live rows; the top-level branches
  // are solved on separate OpenMP threads.
  std::vector<std::vector<std::size_t>> solve() const;

  // Same result on one thread.
  std::vector<std::vector<std::size_t>> solve_serial() const;

  // Whether at least one cover exists (serial, stops at the first).
  bool has_solution() const;

 private:
  using Mask = std::vector<std::uint64_t>;

  struct Search;

  std::size_t universe_;
  std::size_t words_;
  std::vector<Mask> rows_;
  std::vector<std::vector<std::size_t>> rows_with_item_;
};

}  // namespace cayleycodes
