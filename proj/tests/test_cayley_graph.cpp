#include <doctest.h>

#include <random>

#include "cayleycodes/cayley_graph.hpp"
#include "cayleycodes/corpus.hpp"
#include "cayleycodes/exact_cover.hpp"
#include "cayleycodes/group_ring.hpp"
#include "oracles.hpp"

using namespace cayleycodes;

namespace {

ConnectionSet conn(const FiniteGroup& g, std::vector<Element> s) { return ConnectionSet::make(g, std::move(s)); }

Element perm_index(std::vector<std::size_t> p) {
  std::vector<std::size_t> q(p.size());
  std::iota(q.begin(), q.end(), 0);
  Element k = 0;
  for (; q != p; ++k) std::next_permutation(q.begin(), q.end());
  return k;
}

CodeCandidate random_subset(std::mt19937_64& rng, std::size_t n) {
  CodeCandidate c;
  for (Element x = 0; x < n; ++x)
    if (rng() & 1U) c.push_back(x);
  return c;
}

}  // namespace

TEST_CASE("connection set validation") {
  const auto z6 = make_cyclic(6);
  CHECK(conn(z6, {5, 1, 1}).elements() == ElementSet{1, 5});
  try {
    conn(z6, {0, 1, 5});
    FAIL("identity accepted");
  } catch (const InvalidConnectionSet& e) {
    CHECK(e.defect() == ConnectionSetDefect::contains_identity);
    CHECK(std::string(e.what()).find("identity in connection set") != std::string::npos);
  }
  try {
    conn(z6, {1, 2, 5});
    FAIL("non inverse-closed set accepted");
  } catch (const InvalidConnectionSet& e) {
    CHECK(e.defect() == ConnectionSetDefect::not_inverse_closed);
    CHECK(e.witness() == 2);
  }
  CHECK_THROWS_AS(conn(z6, {6}), InvalidConnectionSet);
}

TEST_CASE("inverse orbits cover G minus e") {
  for (const auto& [name, g] : standard_corpus(24)) {
    std::vector<Element> all;
    for (const auto& o : inverse_orbits(g)) {
      CHECK((o.size() == 1 ? g.is_involution(o[0]) : g.inv(o[0]) == o[1]));
      all.insert(all.end(), o.begin(), o.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all.size() + 1 == g.order());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("Cayley graph structure") {
  const auto z6 = make_cyclic(6);
  const CayleyGraph cycle(z6, conn(z6, {1, 5}));
  for (Element x = 0; x < 6; ++x) {
    CHECK(cycle.neighbours(x) == make_element_set({static_cast<Element>((x + 1) % 6), static_cast<Element>((x + 5) % 6)}));
    CHECK_FALSE(cycle.adjacent(x, x));
  }
  const CayleyGraph empty(z6, ConnectionSet::empty());
  for (Element x = 0; x < 6; ++x) CHECK(empty.neighbours(x).empty());

  const auto d6 = make_dihedral(3);
  const CayleyGraph k33(d6, conn(d6, {3, 4, 5}));
  for (Element x = 0; x < 6; ++x) {
    CHECK(k33.degree() == 3);
    for (Element y = 0; y < 6; ++y) CHECK(k33.adjacent(x, y) == ((x < 3) != (y < 3)));
  }

  std::mt19937_64 rng(7);
  for (const auto& [name, g] : standard_corpus(16)) {
    const auto orbits = inverse_orbits(g);
    for (int k = 0; k < 10; ++k) {
      const auto s = connection_set_from_orbits(g, orbits, rng());
      const CayleyGraph graph(g, s);
      for (Element x = 0; x < g.order(); ++x) {
        CHECK(graph.neighbours(x).size() == s.size());
        for (Element y = 0; y < g.order(); ++y) {
          const bool by_definition = oracle::contains(s.elements(), g.mul(y, oracle::inverse(g, x)));
          CHECK(graph.adjacent(x, y) == by_definition);
          CHECK(graph.adjacent(x, y) == graph.adjacent(y, x));
          CHECK(oracle::contains(graph.neighbours(x), y) == by_definition);
        }
      }
    }
  }
}

TEST_CASE("perfect and total perfect codes by definition") {
  const auto z6 = make_cyclic(6);
  const CayleyGraph c6(z6, conn(z6, {1, 5}));
  CHECK(is_perfect_code(c6, {0, 3}));
  CHECK_FALSE(is_total_perfect_code(c6, {0, 3}));
  const auto z4 = make_cyclic(4);
  const CayleyGraph c4(z4, conn(z4, {1, 3}));
  CHECK_FALSE(is_perfect_code(c4, {0}));
  CHECK(is_total_perfect_code(c4, {0, 1}));
  CHECK_FALSE(is_total_perfect_code(c4, {}));
  const CayleyGraph edgeless(z6, ConnectionSet::empty());
  CHECK(is_perfect_code(edgeless, {0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(is_perfect_code(c6, {7}), NotApplicable);
}

TEST_CASE("group ring products") {
  const auto z4 = make_cyclic(4);
  CHECK(group_ring_indicator(z4, {}).coeffs == std::vector<std::int64_t>(4, 0));
  CHECK(is_all_ones(group_ring_indicator(z4, {0, 1, 2, 3})));
  CHECK(group_ring_indicator(z4, {0}).coeffs == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(is_all_ones(group_ring_product(z4, group_ring_indicator(z4, {0, 1}), group_ring_indicator(z4, {0, 2}))));

  const auto s3 = make_symmetric(3);
  const auto u = group_ring_indicator(s3, {perm_index({1, 0, 2})});
  const auto v = group_ring_indicator(s3, {perm_index({2, 1, 0})});
  CHECK_FALSE(group_ring_product(s3, u, v) == group_ring_product(s3, v, u));

  std::mt19937_64 rng(11);
  for (const auto& [name, g] : standard_corpus(24)) {
    CAPTURE(name);
    const auto unit = group_ring_indicator(g, {g.identity()});
    for (int k = 0; k < 20; ++k) {
      GroupRingVector a{std::vector<std::int64_t>(g.order())}, b{std::vector<std::int64_t>(g.order())};
      for (auto& c : a.coeffs) c = static_cast<std::int64_t>(rng() % 7) - 3;
      for (auto& c : b.coeffs) c = static_cast<std::int64_t>(rng() % 7) - 3;
      const auto p = group_ring_product(g, a, b);
      CHECK(p == group_ring_product_serial(g, a, b));
      CHECK(group_ring_product(g, unit, a) == a);
      std::vector<std::int64_t> direct(g.order(), 0);
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y) direct[g.mul(x, y)] += a.coeffs[x] * b.coeffs[y];
      CHECK(p.coeffs == direct);
    }
  }
}

TEST_CASE("group ring checks agree with the definitions") {
  const auto z6 = make_cyclic(6);
  CHECK(group_ring_check_perfect(z6, conn(z6, {1, 5}), {0, 3}));
  CHECK_FALSE(group_ring_check_perfect(z6, conn(z6, {1, 5}), {}));
  const auto z4 = make_cyclic(4);
  CHECK(group_ring_check_total(z4, conn(z4, {1, 3}), {0, 1}));
  CHECK_FALSE(group_ring_check_total(z4, ConnectionSet::empty(), {0, 1}));

  std::mt19937_64 rng(3);
  for (const auto& [name, g] : standard_corpus(16)) {
    CAPTURE(name);
    const auto orbits = inverse_orbits(g);
    const std::uint64_t masks = std::uint64_t{1} << orbits.size();
    for (std::uint64_t m = 0; m < std::min<std::uint64_t>(masks, 64); ++m) {
      const auto s = connection_set_from_orbits(g, orbits, masks <= 64 ? m : rng());
      const CayleyGraph graph(g, s);
      for (int k = 0; k < 50; ++k) {
        const auto c = random_subset(rng, g.order());
        CHECK(is_perfect_code(graph, c) == group_ring_check_perfect(g, s, c));
        CHECK(is_total_perfect_code(graph, c) == group_ring_check_total(g, s, c));
        CHECK(is_perfect_code(graph, c) == oracle::is_code(g, s.elements(), c, false));
        CHECK(is_total_perfect_code(graph, c) == oracle::is_code(g, s.elements(), c, true));
      }
    }
  }
}

TEST_CASE("left transversals") {
  const auto z6 = make_cyclic(6);
  const auto h = subgroup_generated(z6, {3});
  CHECK(is_left_transversal(z6, h, {0, 1, 2}));
  CHECK_FALSE(is_left_transversal(z6, h, {0, 1, 4}));
  CHECK_FALSE(is_left_transversal(z6, h, {0, 1}));
  std::vector<Element> reps;
  for (const auto& b : left_cosets(z6, h)) reps.push_back(b.front());
  CHECK(is_left_transversal(z6, h, reps));

  const auto d12 = make_dihedral(6);
  const auto k = subgroup_generated(d12, {2, 6});
  CHECK(subgroup_code_transversal_check(d12, k, conn(d12, {11}), false));
  CHECK(subgroup_code_transversal_check(d12, k, conn(d12, {6, 11}), true));
  CHECK(subgroup_code_transversal_check(d12, whole_group(d12), ConnectionSet::empty(), false));

  std::mt19937_64 rng(5);
  for (const auto& [name, g] : standard_corpus(16)) {
    CAPTURE(name);
    const auto orbits = inverse_orbits(g);
    for (const auto& sub : all_subgroups(g))
      for (int j = 0; j < 50; ++j) {
        const auto s = connection_set_from_orbits(g, orbits, rng());
        const CayleyGraph graph(g, s);
        CHECK(subgroup_code_transversal_check(g, sub, s, false) == is_perfect_code(graph, sub.elements()));
        CHECK(subgroup_code_transversal_check(g, sub, s, true) == is_total_perfect_code(graph, sub.elements()));
      }
  }
}

TEST_CASE("exact cover") {
  // items 0..3; rows {0,1} {2,3} {0,2} {1,3} {0,1,2,3}
  const ExactCover ec(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 1, 2, 3}});
  const std::vector<std::vector<std::size_t>> expected = {{0, 1}, {2, 3}, {4}};
  CHECK(ec.solve() == expected);
  CHECK(ec.solve_serial() == expected);
  CHECK(ec.has_solution());
  CHECK_FALSE(ExactCover(3, {{0, 1}, {1, 2}}).has_solution());
  CHECK(ExactCover(0, {}).solve() == std::vector<std::vector<std::size_t>>{{}});
  CHECK_THROWS(ExactCover(2, {{0, 2}}));
  CHECK_THROWS(ExactCover(2, {{0, 0}}));
}

TEST_CASE("code enumeration") {
  const auto z6 = make_cyclic(6);
  CHECK(enumerate_perfect_codes(CayleyGraph(z6, conn(z6, {1, 5})), false) ==
        std::vector<CodeCandidate>{{0, 3}, {1, 4}, {2, 5}});
  const auto z5 = make_cyclic(5);
  CHECK(enumerate_perfect_codes(CayleyGraph(z5, conn(z5, {1, 4})), false).empty());
  const auto z4 = make_cyclic(4);
  CHECK(enumerate_perfect_codes(CayleyGraph(z4, conn(z4, {1, 3})), true) ==
        std::vector<CodeCandidate>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  for (const auto& [name, g] : standard_corpus(12)) {
    CAPTURE(name);
    const auto orbits = inverse_orbits(g);
    const std::uint64_t step = orbits.size() > 6 ? 7 : 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << orbits.size()); m += step) {
      const auto s = connection_set_from_orbits(g, orbits, m);
      const CayleyGraph graph(g, s);
      for (bool total : {false, true}) {
        const auto codes = enumerate_perfect_codes(graph, total);
        CHECK(codes == enumerate_perfect_codes_serial(graph, total));
        CHECK(codes == oracle::codes(g, s.elements(), total));
        CHECK(has_perfect_code(graph, total) == !codes.empty());
        for (const auto& c : codes) {
          CHECK(c.size() * (s.size() + (total ? 0 : 1)) == g.order());
          if (total) CHECK(c.size() % 2 == 0);
          for (Element x = 0; x < g.order(); ++x) {
            std::vector<Element> shifted;
            for (auto y : c) shifted.push_back(g.mul(y, x));
            CHECK((total ? is_total_perfect_code(graph, make_element_set(shifted))
                         : is_perfect_code(graph, make_element_set(shifted))));
          }
        }
      }
    }
  }
  Bounds tight;
  tight.enumerate_max_order = 5;
  CHECK_THROWS_AS(enumerate_perfect_codes(CayleyGraph(z6, conn(z6, {1, 5})), false, tight), BoundExceeded);
}
