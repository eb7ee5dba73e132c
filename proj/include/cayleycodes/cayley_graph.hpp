#pragma once

#include <cstdint>
#include <vector>

#include "cayleycodes/bounds.hpp"
#include "cayleycodes/group.hpp"
#include "cayleycodes/subgroup.hpp"

namespace cayleycodes {

// Inverse-closed, identity-free subset of a group.
class ConnectionSet {
 public:
  // Throws InvalidConnectionSet (identity first, then inverse closure).
  static ConnectionSet make(const FiniteGroup& g, std::vector<Element> elements);
  static ConnectionSet empty() { return ConnectionSet({}); }

  const ElementSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element x) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  friend auto operator<=>(const ConnectionSet& a, const ConnectionSet& b) { return a.elements_ <=> b.elements_; }

 private:
  explicit ConnectionSet(ElementSet elements) : elements_(std::move(elements)) {}
  ElementSet elements_;
};

// Orbits of x -> x^-1 on G \ {e}: singletons for involutions, {x, x^-1}
// otherwise, ordered by least element.
std::vector<ElementSet> inverse_orbits(const FiniteGroup& g);

// Union of the orbits selected by the bits of `mask`.
ConnectionSet connection_set_from_orbits(const FiniteGroup& g, const std::vector<ElementSet>& orbits,
                                         std::uint64_t mask);

// Cay(G, S): x ~ y iff y x^-1 in S, so the neighbours of x are s x.
class CayleyGraph {
 public:
  CayleyGraph(FiniteGroup g, ConnectionSet s);

  const FiniteGroup& group() const { return group_; }
  const ConnectionSet& connection_set() const { return conn_; }
  std::size_t order() const { return group_.order(); }
  std::size_t degree() const { return conn_.size(); }

  // Sorted.
  const ElementSet& neighbours(Element x) const { return neighbours_[x]; }
  bool adjacent(Element x, Element y) const { return conn_.contains(group_.mul(y, group_.inv(x))); }
  ElementSet closed_ball(Element c) const;

 private:
  FiniteGroup group_;
  ConnectionSet conn_;
  std::vector<ElementSet> neighbours_;
};

using CodeCandidate = ElementSet;

// Closed balls around C partition V.
bool is_perfect_code(const CayleyGraph& graph, const CodeCandidate& code);

// Every vertex has exactly one neighbour in C.
bool is_total_perfect_code(const CayleyGraph& graph, const CodeCandidate& code);

// Every (total) perfect code, found as exact covers of V by closed (open)
// balls; sorted. The OpenMP and serial routes return identical lists.
std::vector<CodeCandidate> enumerate_perfect_codes(const CayleyGraph& graph, bool total,
                                                   const Bounds& bounds = default_bounds());
std::vector<CodeCandidate> enumerate_perfect_codes_serial(const CayleyGraph& graph, bool total,
                                                          const Bounds& bounds = default_bounds());

// Whether any (total) perfect code exists.
bool has_perfect_code(const CayleyGraph& graph, bool total);

// L meets every left coset xH in exactly one element.
bool is_left_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& l);
bool is_right_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& l);

// H is a perfect code in Cay(G,S) iff S u {e} is a left transversal of H;
// a total perfect code iff S is.
bool subgroup_code_transversal_check(const FiniteGroup& g, const Subgroup& h, const ConnectionSet& s, bool total);

}  // namespace cayleycodes
