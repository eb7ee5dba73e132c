#include "cayleycodes/exact_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayleycodes/parallel.hpp"

namespace cayleycodes {

ExactCover::ExactCover(std::size_t universe, std::vector<std::vector<std::size_t>> rows)
    : universe_(universe), words_((universe + 63) / 64), rows_with_item_(universe) {
  rows_.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Mask mask(words_, 0);
    for (auto item : rows[r]) {
      if (item >= universe) throw std::out_of_range("exact cover row item out of range");
      const auto bit = std::uint64_t{1} << (item % 64);
      if (mask[item / 64] & bit) throw std::invalid_argument("exact cover row repeats an item");
      mask[item / 64] |= bit;
      rows_with_item_[item].push_back(r);
    }
    rows_.push_back(std::move(mask));
  }
}

struct ExactCover::Search {
  const ExactCover& problem;
  Mask covered;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::size_t>> solutions;
  bool stop_at_first = false;

  explicit Search(const ExactCover& p) : problem(p), covered(p.words_, 0) {}

  bool is_covered(std::size_t item) const { return (covered[item / 64] >> (item % 64)) & 1U; }

  bool disjoint(std::size_t row) const {
    for (std::size_t w = 0; w < problem.words_; ++w)
      if (problem.rows_[row][w] & covered[w]) return false;
    return true;
  }

  void toggle(std::size_t row) {
    for (std::size_t w = 0; w < problem.words_; ++w) covered[w] ^= problem.rows_[row][w];
  }

  // The uncovered item with fewest live rows, or universe() when all are covered.
  std::size_t pick(std::vector<std::size_t>& live) const {
    std::size_t best = problem.universe_;
    std::size_t best_count = static_cast<std::size_t>(-1);
    std::vector<std::size_t> candidate;
    for (std::size_t item = 0; item < problem.universe_; ++item) {
      if (is_covered(item)) continue;
      candidate.clear();
      for (auto r : problem.rows_with_item_[item])
        if (disjoint(r)) candidate.push_back(r);
      if (candidate.size() < best_count) {
        best = item;
        best_count = candidate.size();
        live = candidate;
        if (best_count == 0) break;
      }
    }
    return best;
  }

  void record() {
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    solutions.push_back(std::move(sorted));
  }

  void run() {
    if (stop_at_first && !solutions.empty()) return;
    std::vector<std::size_t> live;
    if (pick(live) == problem.universe_) {
      record();
      return;
    }
    for (auto r : live) {
      toggle(r);
      chosen.push_back(r);
      run();
      chosen.pop_back();
      toggle(r);
      if (stop_at_first && !solutions.empty()) return;
    }
  }
};

std::vector<std::vector<std::size_t>> ExactCover::solve_serial() const {
  Search search(*this);
  search.run();
  std::sort(search.solutions.begin(), search.solutions.end());
  return std::move(search.solutions);
}

bool ExactCover::has_solution() const {
  Search search(*this);
  search.stop_at_first = true;
  search.run();
  return !search.solutions.empty();
}

std::vector<std::vector<std::size_t>> ExactCover::solve() const {
  Search root(*this);
  std::vector<std::size_t> live;
  if (root.pick(live) == universe_) return {{}};
  auto branches = parallel_map(live.size(), [&](std::size_t i) {
    Search search(*this);
    search.toggle(live[i]);
    search.chosen.push_back(live[i]);
    search.run();
    return std::move(search.solutions);
  });
  std::vector<std::vector<std::size_t>> all;
  for (auto& b : branches)
    for (auto& s : b) all.push_back(std::move(s));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace cayleycodes
