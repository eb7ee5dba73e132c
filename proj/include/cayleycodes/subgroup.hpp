#pragma once

#include <compare>
#include <vector>

#include "cayleycodes/bounds.hpp"
#include "cayleycodes/group.hpp"

namespace cayleycodes {

// A subgroup of a FiniteGroup together with the generators it was closed from.
class Subgroup {
 public:
  const ElementSet& elements() const { return elements_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const { return x < member_.size() && member_[x]; }
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  // (order, elements), the enumeration order of all_subgroups.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(ElementSet elements, std::vector<Element> generators, std::size_t parent_order);

  ElementSet elements_;
  std::vector<Element> generators_;
  std::vector<bool> member_;

  friend Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& generators);
};

// Smallest subgroup containing `generators`, by closure under right multiplication.
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& generators);

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

// True iff `elements` is closed under multiplication and inverses and holds e.
bool is_subgroup(const FiniteGroup& g, const ElementSet& elements);

// Every subgroup exactly once, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Bounds& bounds = default_bounds());

bool is_normal(const FiniteGroup& g, const Subgroup& h);

std::size_t index_of(const FiniteGroup& g, const Subgroup& h);

// Left cosets xH as sorted blocks, ordered by their least element (the
// canonical representative).
std::vector<ElementSet> left_cosets(const FiniteGroup& g, const Subgroup& h);
std::vector<ElementSet> right_cosets(const FiniteGroup& g, const Subgroup& h);

// Block number of each element in left_cosets / right_cosets.
std::vector<std::size_t> left_coset_ids(const FiniteGroup& g, const Subgroup& h);
std::vector<std::size_t> right_coset_ids(const FiniteGroup& g, const Subgroup& h);

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

bool is_cyclic(const FiniteGroup& g, const Subgroup& h);

// Elements of 2-power order of an abelian group.
Subgroup sylow_two_subgroup(const FiniteGroup& g);

}  // namespace cayleycodes
