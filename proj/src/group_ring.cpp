#include "cayleycodes/group_ring.hpp"

#include <algorithm>

namespace cayleycodes {

GroupRingVector group_ring_indicator(const FiniteGroup& g, const std::vector<Element>& subset) {
  GroupRingVector v{std::vector<std::int64_t>(g.order(), 0)};
  for (auto x : subset) {
    if (x >= g.order()) throw NotApplicable("subset element outside the group");
    v.coeffs[x] = 1;
  }
  return v;
}

namespace {

void require_same_group(const FiniteGroup& g, const GroupRingVector& u, const GroupRingVector& v) {
  if (u.coeffs.size() != g.order() || v.coeffs.size() != g.order())
    throw NotApplicable("group ring vectors must have one coefficient per group element");
}

}  // namespace

GroupRingVector group_ring_product(const FiniteGroup& g, const GroupRingVector& u, const GroupRingVector& v) {
  require_same_group(g, u, v);
  const auto n = static_cast<long long>(g.order());
  GroupRingVector out{std::vector<std::int64_t>(g.order(), 0)};
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < n; ++x) {
    std::int64_t sum = 0;
    for (Element h = 0; h < g.order(); ++h)
      if (u.coeffs[h] != 0) sum += u.coeffs[h] * v.coeffs[g.mul(g.inv(h), static_cast<Element>(x))];
    out.coeffs[static_cast<std::size_t>(x)] = sum;
  }
  return out;
}

GroupRingVector group_ring_product_serial(const FiniteGroup& g, const GroupRingVector& u, const GroupRingVector& v) {
  require_same_group(g, u, v);
  GroupRingVector out{std::vector<std::int64_t>(g.order(), 0)};
  for (Element h = 0; h < g.order(); ++h) {
    if (u.coeffs[h] == 0) continue;
    for (Element k = 0; k < g.order(); ++k) out.coeffs[g.mul(h, k)] += u.coeffs[h] * v.coeffs[k];
  }
  return out;
}

bool is_all_ones(const GroupRingVector& v) {
  return std::all_of(v.coeffs.begin(), v.coeffs.end(), [](std::int64_t c) { return c == 1; });
}

bool group_ring_tiles(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b) {
  return is_all_ones(group_ring_product_serial(g, group_ring_indicator(g, a), group_ring_indicator(g, b)));
}

bool group_ring_check_perfect(const FiniteGroup& g, const ConnectionSet& s, const std::vector<Element>& code) {
  std::vector<Element> ball = s.elements();
  ball.push_back(g.identity());
  return group_ring_tiles(g, ball, code);
}

bool group_ring_check_total(const FiniteGroup& g, const ConnectionSet& s, const std::vector<Element>& code) {
  return group_ring_tiles(g, s.elements(), code);
}

}  // namespace cayleycodes
