#include "cayleycodes/cayley_graph.hpp"

#include <algorithm>

#include "cayleycodes/exact_cover.hpp"

namespace cayleycodes {

ConnectionSet ConnectionSet::make(const FiniteGroup& g, std::vector<Element> elements) {
  ElementSet set = make_element_set(std::move(elements));
  for (auto x : set)
    if (x >= g.order()) throw InvalidConnectionSet(ConnectionSetDefect::out_of_range, x);
  if (std::binary_search(set.begin(), set.end(), g.identity()))
    throw InvalidConnectionSet(ConnectionSetDefect::contains_identity, g.identity());
  for (auto x : set)
    if (!std::binary_search(set.begin(), set.end(), g.inv(x)))
      throw InvalidConnectionSet(ConnectionSetDefect::not_inverse_closed, x);
  return ConnectionSet(std::move(set));
}

bool ConnectionSet::contains(Element x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::vector<ElementSet> inverse_orbits(const FiniteGroup& g) {
  std::vector<ElementSet> orbits;
  for (Element x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    const Element y = g.inv(x);
    if (y < x) continue;
    orbits.push_back(y == x ? ElementSet{x} : ElementSet{x, y});
  }
  return orbits;
}

ConnectionSet connection_set_from_orbits(const FiniteGroup& g, const std::vector<ElementSet>& orbits,
                                         std::uint64_t mask) {
  std::vector<Element> elements;
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if ((mask >> k) & 1U) elements.insert(elements.end(), orbits[k].begin(), orbits[k].end());
  return ConnectionSet::make(g, std::move(elements));
}

CayleyGraph::CayleyGraph(FiniteGroup g, ConnectionSet s)
    : group_(std::move(g)), conn_(std::move(s)), neighbours_(group_.order()) {
  for (auto x : conn_.elements())
    if (x >= group_.order()) throw InvalidConnectionSet(ConnectionSetDefect::out_of_range, x);
  for (Element x = 0; x < group_.order(); ++x) {
    std::vector<Element> nb;
    nb.reserve(conn_.size());
    for (auto s : conn_.elements()) nb.push_back(group_.mul(s, x));
    neighbours_[x] = make_element_set(std::move(nb));
  }
}

ElementSet CayleyGraph::closed_ball(Element c) const {
  std::vector<Element> ball = neighbours_[c];
  ball.push_back(c);
  return make_element_set(std::move(ball));
}

namespace {

void require_vertices(const CayleyGraph& graph, const CodeCandidate& code) {
  for (auto c : code)
    if (c >= graph.order()) throw NotApplicable("code vertex " + std::to_string(c) + " outside the graph");
}

}  // namespace

bool is_perfect_code(const CayleyGraph& graph, const CodeCandidate& code) {
  require_vertices(graph, code);
  std::vector<std::size_t> hits(graph.order(), 0);
  for (auto c : make_element_set(code)) {
    ++hits[c];
    for (auto v : graph.neighbours(c)) ++hits[v];
  }
  return std::all_of(hits.begin(), hits.end(), [](std::size_t k) { return k == 1; });
}

bool is_total_perfect_code(const CayleyGraph& graph, const CodeCandidate& code) {
  require_vertices(graph, code);
  std::vector<std::size_t> hits(graph.order(), 0);
  for (auto c : make_element_set(code))
    for (auto v : graph.neighbours(c)) ++hits[v];
  return std::all_of(hits.begin(), hits.end(), [](std::size_t k) { return k == 1; });
}

namespace {

ExactCover ball_cover(const CayleyGraph& graph, bool total) {
  std::vector<std::vector<std::size_t>> rows(graph.order());
  for (Element c = 0; c < graph.order(); ++c) {
    const ElementSet ball = total ? graph.neighbours(c) : graph.closed_ball(c);
    rows[c].assign(ball.begin(), ball.end());
  }
  return ExactCover(graph.order(), std::move(rows));
}

std::vector<CodeCandidate> to_codes(const std::vector<std::vector<std::size_t>>& covers) {
  std::vector<CodeCandidate> codes;
  codes.reserve(covers.size());
  for (const auto& cover : covers) codes.emplace_back(cover.begin(), cover.end());
  return codes;
}

void check_enumeration_bound(const CayleyGraph& graph, const Bounds& bounds) {
  if (graph.order() > bounds.enumerate_max_order)
    throw BoundExceeded("enumerate_perfect_codes: group order", graph.order(), bounds.enumerate_max_order);
}

}  // namespace

std::vector<CodeCandidate> enumerate_perfect_codes(const CayleyGraph& graph, bool total, const Bounds& bounds) {
  check_enumeration_bound(graph, bounds);
  return to_codes(ball_cover(graph, total).solve());
}

std::vector<CodeCandidate> enumerate_perfect_codes_serial(const CayleyGraph& graph, bool total,
                                                          const Bounds& bounds) {
  check_enumeration_bound(graph, bounds);
  return to_codes(ball_cover(graph, total).solve_serial());
}

bool has_perfect_code(const CayleyGraph& graph, bool total) { return ball_cover(graph, total).has_solution(); }

namespace {

bool is_transversal(const std::vector<std::size_t>& ids, std::size_t blocks, const std::vector<Element>& l) {
  std::vector<bool> hit(blocks, false);
  for (auto x : make_element_set(l)) {
    if (x >= ids.size() || hit[ids[x]]) return false;
    hit[ids[x]] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool is_left_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& l) {
  return is_transversal(left_coset_ids(g, h), index_of(g, h), l);
}

bool is_right_transversal(const FiniteGroup& g, const Subgroup& h, const std::vector<Element>& l) {
  return is_transversal(right_coset_ids(g, h), index_of(g, h), l);
}

bool subgroup_code_transversal_check(const FiniteGroup& g, const Subgroup& h, const ConnectionSet& s, bool total) {
  std::vector<Element> l = s.elements();
  if (!total) l.push_back(g.identity());
  return is_left_transversal(g, h, l);
}

}  // namespace cayleycodes
