#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cayleycodes/errors.hpp"

namespace cayleycodes {

enum class GroupKind { cyclic, dihedral, abelian_product, product, table };

const char* to_string(GroupKind kind);

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

ElementSet make_element_set(std::vector<Element> elements);

// A finite group given by its full multiplication table. Elements are the
// dense indices 0..order()-1. Instances are immutable; copies share the table.
class FiniteGroup {
 public:
  std::size_t order() const { return n_; }
  Element identity() const { return identity_; }

  Element mul(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Element inv(Element x) const;
  Element pow(Element x, long long k) const;
  // x y x^-1
  Element conjugate(Element x, Element y) const { return mul(mul(x, y), inv(x)); }

  std::size_t element_order(Element x) const;
  bool is_involution(Element x) const { return x != identity_ && mul(x, x) == identity_; }

  GroupKind kind() const;
  bool is_abelian() const;
  const std::string& label(Element x) const;

  // Orders m_1..m_k of a stored cyclic decomposition (cyclic, abelian-product,
  // and products of those). When non-empty, element indices are the mixed-radix
  // encoding of the exponent tuple, last factor fastest. Empty otherwise.
  const std::vector<std::size_t>& cyclic_factors() const;

  // n for the dihedral group of order 2n built by make_dihedral, else 0.
  // Indexing: a^i is i, a^i b is n + i.
  std::size_t dihedral_degree() const;

  std::span<const Element> table() const { return {table_, n_ * n_}; }

 private:
  struct Data;

  explicit FiniteGroup(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  const Element* table_ = nullptr;
  std::size_t n_ = 0;
  Element identity_ = 0;

  friend class GroupAssembler;
};

// Internal constructor path shared by the builders. Not validated; callers
// either build tables that are correct by construction or validate first.
class GroupAssembler {
 public:
  static FiniteGroup assemble(std::size_t n, std::vector<Element> table, GroupKind kind,
                              std::vector<std::string> labels,
                              std::vector<std::size_t> cyclic_factors = {},
                              std::size_t dihedral_degree = 0);
};

FiniteGroup make_cyclic(std::size_t n);

// Dihedral group of order 2n, <a, b | a^n = b^2 = (ab)^2 = e>.
FiniteGroup make_dihedral(std::size_t n);

// Direct product of cyclic groups of the given orders.
FiniteGroup make_abelian(const std::vector<std::size_t>& orders);

// Validates the table and returns the group. Checks run in the order shape,
// identity, inverses, Latin square, associativity; the first failure throws
// InvalidTable with the lexicographically first witness.
FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table);

// Index of (g, h) is g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Group generated by permutations of {0..degree-1}, elements sorted
// lexicographically by image vector (so the identity is element 0).
FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators);

FiniteGroup make_symmetric(std::size_t degree);
FiniteGroup make_alternating(std::size_t degree);

ElementSet centre(const FiniteGroup& g);

// Sorted multiset of element orders.
std::vector<std::size_t> order_statistics(const FiniteGroup& g);

bool is_cyclic_group(const FiniteGroup& g);

}  // namespace cayleycodes
