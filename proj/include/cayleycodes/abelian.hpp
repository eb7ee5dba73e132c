#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleycodes/group.hpp"
#include "cayleycodes/subgroup.hpp"

namespace cayleycodes {

// Independent generators g_1..g_k of an abelian (sub)group K with
// K = <g_1> x ... x <g_k>, and the exponent tuple of each element of K.
struct AbelianBasis {
  std::vector<Element> generators;
  std::vector<std::size_t> orders;
  // exponents[x] is the tuple of x (empty when x lies outside K).
  std::vector<std::vector<std::size_t>> exponents;

  std::size_t rank() const { return generators.size(); }
  // pi_i(x) as an exponent of g_i.
  std::size_t projection(std::size_t i, Element x) const { return exponents[x].at(i); }
};

// Primary decomposition of the abelian subgroup `within`: each Sylow part is
// split by backtracking over independent elements of non-increasing order.
// With a seed, candidates of equal order are tried in a shuffled order, which
// generally yields a different basis.
AbelianBasis find_abelian_basis(const FiniteGroup& g, const Subgroup& within,
                                std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// The stored cyclic decomposition when the group carries one, else a computed one.
AbelianBasis abelian_decomposition(const FiniteGroup& g);

}  // namespace cayleycodes
