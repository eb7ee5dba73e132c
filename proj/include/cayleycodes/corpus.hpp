#pragma once

#include <string>
#include <vector>

#include "cayleycodes/group.hpp"

namespace cayleycodes {

struct CorpusGroup {
  std::string name;  // a GroupSpec where one exists, else a short description
  FiniteGroup group;
};

// The quaternion group of order 8 as a literal Cayley table:
// 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
FiniteGroup make_quaternion();

// Non-cyclic invariant-factor lists of abelian groups of order <= max_order.
std::vector<std::vector<std::size_t>> noncyclic_abelian_types(std::size_t max_order);

// Abelian 2-groups of order <= max_order, cyclic ones included.
std::vector<std::vector<std::size_t>> abelian_two_group_types(std::size_t max_order);

// Cyclic groups of order 1..24, dihedral groups of order 6..24, non-cyclic
// abelian products of order <= 24, Q8, A4, S4, C3 x S3 and abelian:2,4,4;
// restricted to order <= max_order.
std::vector<CorpusGroup> standard_corpus(std::size_t max_order = 32);

// Every abelian group (cyclic and non-cyclic types) of order <= max_order.
std::vector<CorpusGroup> abelian_corpus(std::size_t max_order, std::size_t min_order = 1);

std::string abelian_spec(const std::vector<std::size_t>& orders);

}  // namespace cayleycodes
