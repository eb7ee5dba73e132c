#include "cayleycodes/corpus.hpp"

#include <functional>

#include "cayleycodes/group_spec.hpp"

namespace cayleycodes {

FiniteGroup make_quaternion() {
  // Signed units: index 2u + s stands for (-1)^s u with u in {1, i, j, k}.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t u = x / 2, v = y / 2;
      const std::size_t sign = (x + y + unit_sign[u][v]) % 2;
      table[x][y] = 2 * unit_product[u][v] + sign;
    }
  return from_table(table);
}

namespace {

// Invariant factors d_1 | d_2 | ... | d_k with product n, d_1 > 1.
void invariant_factor_lists(std::size_t n, std::size_t first, std::vector<std::size_t>& cur,
                            std::vector<std::vector<std::size_t>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (std::size_t d = first; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::size_t rest = n / d;
    // every later factor is a multiple of d, so rest must be a power-of-d multiple
    if (rest != 1 && rest % d != 0) continue;
    cur.push_back(d);
    invariant_factor_lists(rest, d, cur, out);
    cur.pop_back();
  }
}

bool chain_divides(const std::vector<std::size_t>& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] % f[i - 1] != 0) return false;
  return true;
}

std::vector<std::vector<std::size_t>> all_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> out, raw;
  std::vector<std::size_t> cur;
  invariant_factor_lists(n, 2, cur, raw);
  for (auto& f : raw)
    if (chain_divides(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace

std::string abelian_spec(const std::vector<std::size_t>& orders) {
  std::string s = "abelian:";
  for (std::size_t i = 0; i < orders.size(); ++i) s += (i ? "," : "") + std::to_string(orders[i]);
  return s;
}

std::vector<std::vector<std::size_t>> noncyclic_abelian_types(std::size_t max_order) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (auto& f : all_types(n))
      if (f.size() > 1) out.push_back(std::move(f));
  return out;
}

std::vector<std::vector<std::size_t>> abelian_two_group_types(std::size_t max_order) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t n = 2; n <= max_order; n *= 2)
    for (auto& f : all_types(n)) out.push_back(std::move(f));
  return out;
}

std::vector<CorpusGroup> standard_corpus(std::size_t max_order) {
  std::vector<CorpusGroup> out;
  auto add = [&](std::string name, const std::function<FiniteGroup()>& make, std::size_t order) {
    if (order <= max_order) out.push_back({std::move(name), make()});
  };
  for (std::size_t n = 1; n <= 24; ++n) add("cyclic:" + std::to_string(n), [n] { return make_cyclic(n); }, n);
  for (std::size_t n = 3; n <= 12; ++n)
    add("dihedral:" + std::to_string(n), [n] { return make_dihedral(n); }, 2 * n);
  for (const auto& f : noncyclic_abelian_types(24)) {
    std::size_t order = 1;
    for (auto d : f) order *= d;
    add(abelian_spec(f), [f] { return make_abelian(f); }, order);
  }
  add("Q8 (table)", make_quaternion, 8);
  add("A4", [] { return make_alternating(4); }, 12);
  add("S4", [] { return make_symmetric(4); }, 24);
  add("product:(cyclic:3)x(dihedral:3)", [] { return parse_group_spec("product:(cyclic:3)x(dihedral:3)"); }, 18);
  add("abelian:2,4,4", [] { return make_abelian({2, 4, 4}); }, 32);
  return out;
}

std::vector<CorpusGroup> abelian_corpus(std::size_t max_order, std::size_t min_order) {
  std::vector<CorpusGroup> out;
  for (std::size_t n = std::max<std::size_t>(min_order, 1); n <= max_order; ++n) {
    out.push_back({"cyclic:" + std::to_string(n), make_cyclic(n)});
    for (const auto& f : all_types(n))
      if (f.size() > 1) out.push_back({abelian_spec(f), make_abelian(f)});
  }
  return out;
}

}  // namespace cayleycodes
