#pragma once

#include <cstdint>
#include <vector>

#include "cayleycodes/cayley_graph.hpp"
#include "cayleycodes/group.hpp"

namespace cayleycodes {

// An element sum_g c_g g of Z[G], coefficients indexed by element.
struct GroupRingVector {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const GroupRingVector&, const GroupRingVector&) = default;
};

GroupRingVector group_ring_indicator(const FiniteGroup& g, const std::vector<Element>& subset);

// (uv)(x) = sum_h u(h) v(h^-1 x). The default route computes each output
// coefficient on its own OpenMP iteration; the serial route scatters every
// product u(h) v(k) into hk.
GroupRingVector group_ring_product(const FiniteGroup& g, const GroupRingVector& u, const GroupRingVector& v);
GroupRingVector group_ring_product_serial(const FiniteGroup& g, const GroupRingVector& u, const GroupRingVector& v);

bool is_all_ones(const GroupRingVector& v);

// A-bar * B-bar == G-bar
bool group_ring_tiles(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b);

// (S u {e})-bar * C-bar == G-bar
bool group_ring_check_perfect(const FiniteGroup& g, const ConnectionSet& s, const std::vector<Element>& code);

// S-bar * C-bar == G-bar
bool group_ring_check_total(const FiniteGroup& g, const ConnectionSet& s, const std::vector<Element>& code);

}  // namespace cayleycodes
