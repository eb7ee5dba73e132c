#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cayleycodes/abelian.hpp"
#include "cayleycodes/bounds.hpp"
#include "cayleycodes/cayley_graph.hpp"
#include "cayleycodes/group.hpp"
#include "cayleycodes/subgroup.hpp"

namespace cayleycodes {

enum class Method { property1, parity, cyclic, abelian_projection, dihedral, generic_search };

const char* to_string(Method method);

struct FailingElement {
  Element g;
  friend bool operator==(const FailingElement&, const FailingElement&) = default;
};

using Witness = std::variant<std::monostate, FailingElement, ConnectionSet>;

// Whether H is a perfect code (total perfect code) in some Cayley graph of G.
struct CriterionVerdict {
  bool perfect = false;
  bool total = false;
  Method method = Method::generic_search;
  Witness witness;
};

// Property (1): every g with g^2 in H has some h in H with (gh)^2 = e.
struct PropertyOneResult {
  bool holds = true;
  std::optional<Element> witness;  // least failing g
};

PropertyOneResult property_one_holds(const FiniteGroup& g, const Subgroup& h);

// Normal H: perfect iff property (1); total iff additionally |H| even.
// Witness: the failing g, or the connection set S built for the perfect case.
CriterionVerdict normal_subgroup_code(const FiniteGroup& g, const Subgroup& h);

// For normal H satisfying property (1): S with S u {e} a left transversal of H
// (perfect), or R = S u {g0} with g0 an involution of H (total). Coset
// representatives and fixers are least-index choices.
ConnectionSet construct_connection_set_normal(const FiniteGroup& g, const Subgroup& h, bool total);

// The involution g0 that construct_connection_set_normal adds in the total case.
Element total_code_involution(const FiniteGroup& g, const Subgroup& h);

// Sufficient-only parity shortcut for normal H (odd |H| or odd index).
std::optional<CriterionVerdict> parity_criterion(const FiniteGroup& g, const Subgroup& h);

// Cyclic G: perfect iff |H| or |G/H| odd; total iff |H| even and |G/H| odd.
CriterionVerdict cyclic_criterion(const FiniteGroup& g, const Subgroup& h);

struct SylowReduction {
  Subgroup sylow;
  Subgroup intersection;
};

SylowReduction abelian_sylow_reduction(const FiniteGroup& g, const Subgroup& h);

using AbelianTwoGroupBasis = AbelianBasis;

// Basis of an abelian 2-group P <= G. Generator orders are powers of two.
AbelianTwoGroupBasis two_group_basis(const FiniteGroup& g, const Subgroup& p,
                                     std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// Projection test for abelian G with H n P cyclic. Throws NotApplicable when
// H n P is not cyclic. The basis overload uses the given decomposition of P.
CriterionVerdict abelian_criterion(const FiniteGroup& g, const Subgroup& h);
CriterionVerdict abelian_criterion(const FiniteGroup& g, const Subgroup& h, const AbelianTwoGroupBasis& basis);

// H = <a^t> in D_2n.
CriterionVerdict dihedral_cyclic_criterion(std::size_t n, std::size_t t);

// Proper H of a group built by make_dihedral.
CriterionVerdict dihedral_criterion(const FiniteGroup& g, const Subgroup& h);

// (t, s) with H = <a^t, a^s b>, 0 <= s < t, when H contains a reflection.
std::optional<std::pair<std::size_t, std::size_t>> dihedral_parameters(const FiniteGroup& g, const Subgroup& h);

struct DihedralSets {
  ConnectionSet total_set;    // R = {b, ba, ..., ba^(t-1)}
  ConnectionSet perfect_set;  // S = {a^(s-1) b, ..., a^(s-t+1) b}
};

DihedralSets dihedral_construct_sets(const FiniteGroup& g, std::size_t t, std::size_t s);

// Backtracking over coset representatives for an inverse-closed left
// transversal of H: containing e (perfect) or avoiding e (total). Both
// questions are decided; the witness is the connection set for the flagged one.
CriterionVerdict generic_subgroup_code_decision(const FiniteGroup& g, const Subgroup& h, bool total,
                                                const Bounds& bounds = default_bounds());

// Inverse-closed left transversal found by the generic search, if any.
std::optional<ElementSet> inverse_closed_transversal(const FiniteGroup& g, const Subgroup& h, bool contains_identity);

// Fastest applicable criterion: cyclic for cyclic G, else parity, then
// abelian / dihedral, then the normal-subgroup theorem, then generic search.
CriterionVerdict classify_subgroup(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds = default_bounds());

// Every applicable criterion, in dispatcher order, for cross-checking.
std::vector<CriterionVerdict> all_applicable_verdicts(const FiniteGroup& g, const Subgroup& h,
                                                      const Bounds& bounds = default_bounds());

}  // namespace cayleycodes
