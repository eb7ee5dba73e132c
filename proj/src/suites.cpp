#include "cayleycodes/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cayleycodes/characters.hpp"
#include "cayleycodes/corpus.hpp"
#include "cayleycodes/criteria.hpp"
#include "cayleycodes/group_ring.hpp"
#include "cayleycodes/group_spec.hpp"
#include "cayleycodes/pcp.hpp"

namespace cayleycodes {

namespace {

constexpr std::size_t kept_messages = 12;

class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.messages.size() < kept_messages) r_.messages.push_back(describe());
  }

  // Runs body, turning an escaped exception into one failure.
  void guarded(const std::string& where, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return where + ": " + e.what(); });
    }
  }

 private:
  SuiteResult& r_;
};

std::string set_text(const FiniteGroup& g, const std::vector<Element>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << g.label(s[i]);
  out << '}';
  return out.str();
}

// Bounds wide enough for a suite whose groups reach `order`.
Bounds suite_bounds(std::size_t order) {
  Bounds b = default_bounds();
  b.subgroup_max_order = std::max(b.subgroup_max_order, order);
  b.generic_max_order = std::max(b.generic_max_order, order);
  b.enumerate_max_order = std::max(b.enumerate_max_order, order);
  b.automorphism_max_order = std::max(b.automorphism_max_order, order);
  return b;
}

void theorem3(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (const auto& [name, g] : standard_corpus(r.max_order)) {
    ++r.groups;
    t.guarded(name, [&, &name = name, &g = g] {
      for (const auto& h : all_subgroups(g, bounds)) {
        if (!is_normal(g, h)) continue;
        const auto thm = normal_subgroup_code(g, h);
        const auto gen = generic_subgroup_code_decision(g, h, false, bounds);
        t.check(thm.perfect == gen.perfect && thm.total == gen.total, [&] {
          return name + " H=" + set_text(g, h.elements()) + ": theorem (" + std::to_string(thm.perfect) + "," +
                 std::to_string(thm.total) + ") vs search (" + std::to_string(gen.perfect) + "," +
                 std::to_string(gen.total) + ")";
        });
      }
    });
  }
}

void cor3(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (std::size_t n = 1; n <= r.max_order; ++n) {
    ++r.groups;
    const auto g = make_cyclic(n);
    t.guarded("cyclic:" + std::to_string(n), [&] {
      for (const auto& h : all_subgroups(g, bounds)) {
        const auto parity = cyclic_criterion(g, h);
        const auto thm = normal_subgroup_code(g, h);
        t.check(parity.perfect == thm.perfect && parity.total == thm.total,
                [&] { return "cyclic:" + std::to_string(n) + " |H|=" + std::to_string(h.order()) + ": parity vs theorem"; });
        if (n <= 24) {
          const auto gen = generic_subgroup_code_decision(g, h, false, bounds);
          t.check(parity.perfect == gen.perfect && parity.total == gen.total,
                  [&] { return "cyclic:" + std::to_string(n) + " |H|=" + std::to_string(h.order()) + ": parity vs search"; });
        }
      }
    });
  }
}

void dihedral(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (std::size_t n = 3; 2 * n <= r.max_order; ++n) {
    ++r.groups;
    const auto g = make_dihedral(n);
    const std::string name = "dihedral:" + std::to_string(n);
    t.guarded(name, [&] {
      for (const auto& h : all_subgroups(g, bounds)) {
        if (h.order() == g.order()) continue;
        const auto v = dihedral_criterion(g, h);
        const auto gen = generic_subgroup_code_decision(g, h, false, bounds);
        t.check(v.perfect == gen.perfect && v.total == gen.total,
                [&] { return name + " H=" + set_text(g, h.elements()) + ": dihedral criterion vs search"; });
        const bool has_reflection = h.elements().back() >= n;
        if (has_reflection)
          t.check(v.perfect && v.total, [&] { return name + " H=" + set_text(g, h.elements()) + " not both perfect and total"; });
      }
      for (std::size_t tt = 2; tt <= n; ++tt) {
        if (n % tt != 0) continue;
        for (std::size_t s = 0; s < tt; ++s) {
          const auto h = subgroup_generated(g, {static_cast<Element>(tt % n), static_cast<Element>(n + s)});
          const auto sets = dihedral_construct_sets(g, tt, s);
          const bool perfect = is_perfect_code(CayleyGraph(g, sets.perfect_set), h.elements());
          const bool total = is_total_perfect_code(CayleyGraph(g, sets.total_set), h.elements());
          t.check(perfect && total, [&] {
            return name + " t=" + std::to_string(tt) + " s=" + std::to_string(s) + ": constructed sets fail";
          });
        }
      }
    });
  }
}

void abelian(SuiteResult& r, Tally& t, const SuiteOptions& options) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (const auto& f : abelian_two_group_types(r.max_order)) {
    ++r.groups;
    const auto g = make_abelian(f);
    const std::string name = abelian_spec(f);
    t.guarded(name, [&] {
      const auto p = sylow_two_subgroup(g);
      const auto first = two_group_basis(g, p);
      const auto second = two_group_basis(g, p, options.seed);
      for (const auto& h : all_subgroups(g, bounds)) {
        if (!is_cyclic(g, intersect(g, h, p))) continue;
        const auto proj = abelian_criterion(g, h, first);
        const auto proj2 = abelian_criterion(g, h, second);
        const auto thm = normal_subgroup_code(g, h);
        t.check(proj.perfect == thm.perfect && proj.total == thm.total,
                [&] { return name + " H=" + set_text(g, h.elements()) + ": projection vs property (1)"; });
        t.check(proj.perfect == proj2.perfect && proj.total == proj2.total,
                [&] { return name + " H=" + set_text(g, h.elements()) + ": verdict depends on the basis"; });
      }
    });
  }
}

std::vector<Element> subset_from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) out.push_back(static_cast<Element>(i));
  return out;
}

std::vector<Element> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t size) {
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), Element{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

void lemma_equivalence(SuiteResult& r, Tally& t, const SuiteOptions& options) {
  for (const auto& [name, g] : abelian_corpus(std::min<std::size_t>(r.max_order, 8))) {
    ++r.groups;
    const std::size_t n = g.order();
    t.guarded(name, [&, &name = name, &g = g] {
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
          bool ok = true;
          try {
            verify_lemma_equivalence(g, subset_from_mask(a, n), subset_from_mask(b, n));
          } catch (const Defect&) {
            ok = false;
          }
          t.check(ok, [&] { return name + ": disagreement at A-mask " + std::to_string(a) + ", B-mask " + std::to_string(b); });
        }
    });
  }
  std::mt19937_64 rng(options.seed);
  for (const auto& [name, g] : abelian_corpus(r.max_order, 9)) {
    ++r.groups;
    const std::size_t n = g.order();
    t.guarded(name, [&, &name = name, &g = g] {
      std::uniform_int_distribution<std::size_t> any_size(0, n);
      std::vector<std::size_t> divisors;
      for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
      std::uniform_int_distribution<std::size_t> pick(0, divisors.size() - 1);
      for (int k = 0; k < 500; ++k) {
        std::vector<Element> a, b;
        if (k % 2 == 0) {
          a = random_subset(rng, n, any_size(rng));
          b = random_subset(rng, n, any_size(rng));
        } else {
          // sizes multiply to |G|, so the trivial character alone cannot decide
          const std::size_t d = divisors[pick(rng)];
          a = random_subset(rng, n, d);
          b = random_subset(rng, n, n / d);
        }
        bool ok = true;
        try {
          verify_lemma_equivalence(g, a, b);
        } catch (const Defect&) {
          ok = false;
        }
        t.check(ok, [&] { return name + ": disagreement at sample " + std::to_string(k); });
      }
    });
  }
}

void thm4a(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (const auto& [name, g] : abelian_corpus(r.max_order)) {
    ++r.groups;
    t.guarded(name, [&, &name = name, &g = g] {
      auto sigmas = all_power_automorphisms(g, bounds);
      for (long long m = 1; m <= static_cast<long long>(g.order()); ++m) {
        if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
        const auto p = power_map(g, m);
        t.check(is_power_automorphism(g, p), [&] { return name + ": x^" + std::to_string(m) + " is not a power automorphism"; });
        if (std::find(sigmas.begin(), sigmas.end(), p) == sigmas.end()) sigmas.push_back(p);
      }
      const auto orbits = inverse_orbits(g);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
        const auto s = connection_set_from_orbits(g, orbits, mask);
        const CayleyGraph graph(g, s);
        for (bool total : {false, true}) {
          for (const auto& c : enumerate_perfect_codes(graph, total, bounds)) {
            std::vector<Element> a = s.elements();
            if (!total) a.push_back(g.identity());
            for (const auto& sigma : sigmas) {
              const auto image = sigma.apply(c);
              const bool code_ok = total ? is_total_perfect_code(graph, image) : is_perfect_code(graph, image);
              t.check(code_ok, [&] { return name + " S=" + set_text(g, s.elements()) + " C=" + set_text(g, c) + ": image not a code"; });
              t.check(power_automorphism_tiling_transport(g, a, c, sigma),
                      [&] { return name + " S=" + set_text(g, s.elements()) + ": tiling not transported"; });
            }
          }
        }
      }
    });
  }
}

std::vector<CorpusGroup> prop3_groups(std::size_t max_order) {
  std::vector<CorpusGroup> out;
  for (std::size_t n : {3, 4, 5, 6})
    if (2 * n <= max_order) out.push_back({"dihedral:" + std::to_string(n), make_dihedral(n)});
  return out;
}

void prop3(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (const auto& [name, g] : prop3_groups(r.max_order)) {
    ++r.groups;
    t.guarded(name, [&, &name = name, &g = g] {
      for (Element by = 0; by < g.order(); ++by) {
        const auto sigma = prop3_sigma(g, by);
        const auto w = prop3_witness(g, by, bounds);
        if (is_power_automorphism(g, sigma)) {
          t.check(!w.has_value(), [&] { return name + " g=" + g.label(by) + ": witness for a power automorphism"; });
          continue;
        }
        if (!w) {
          t.check(false, [&] { return name + " g=" + g.label(by) + ": no witness"; });
          continue;
        }
        const CayleyGraph graph(g, w->s);
        const auto describe = [&] { return name + " g=" + g.label(by) + " S=" + set_text(g, w->s.elements()); };
        t.check(is_perfect_code(graph, w->c), describe);
        t.check(!is_perfect_code(graph, w->c_sigma), describe);
        t.check(group_ring_check_perfect(g, w->s, w->c), describe);
        t.check(!group_ring_check_perfect(g, w->s, w->c_sigma), describe);
      }
    });
  }
}

void trivial_centre(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  std::vector<CorpusGroup> groups;
  if (r.max_order >= 6) groups.push_back({"dihedral:3", make_dihedral(3)});
  if (r.max_order >= 10) groups.push_back({"dihedral:5", make_dihedral(5)});
  if (r.max_order >= 24) groups.push_back({"S4", make_symmetric(4)});
  for (const auto& [name, g] : groups) {
    ++r.groups;
    t.guarded(name, [&, &name = name, &g = g] {
      const auto res = verify_trivial_centre_corollary(g, bounds);
      t.check(res.holds && res.inner_checked + 1 == g.order(), [&] {
        return name + ": " + std::to_string(res.survivors.size()) + " non-identity inner automorphisms not refuted";
      });
    });
  }
  t.guarded("cyclic:6", [&] {
    bool threw = false;
    try {
      verify_trivial_centre_corollary(make_cyclic(6), bounds);
    } catch (const NotApplicable&) {
      threw = true;
    }
    t.check(threw, [] { return std::string("cyclic:6 accepted despite a nontrivial centre"); });
  });
}

// Every transversal of the left cosets, one element per coset, tried directly.
bool brute_force_transversal_exists(const FiniteGroup& g, const Subgroup& h) {
  const auto blocks = left_cosets(g, h);
  std::vector<std::size_t> choice(blocks.size(), 0);
  while (true) {
    std::vector<Element> l;
    for (std::size_t b = 0; b < blocks.size(); ++b) l.push_back(blocks[b][choice[b]]);
    std::sort(l.begin(), l.end());
    const bool has_e = std::binary_search(l.begin(), l.end(), g.identity());
    const bool closed = std::all_of(l.begin(), l.end(), [&](Element x) { return std::binary_search(l.begin(), l.end(), g.inv(x)); });
    if (has_e && closed) return true;
    std::size_t b = 0;
    while (b < blocks.size() && ++choice[b] == blocks[b].size()) choice[b++] = 0;
    if (b == blocks.size()) return false;
  }
}

void counterexample(SuiteResult& r, Tally& t, const SuiteOptions&) {
  ++r.groups;
  t.guarded("abelian:2,4,4", [&] {
    const auto g = parse_group_spec("abelian:2,4,4");
    const auto h = subgroup_generated(g, parse_element_list(g, "a1*a2^2,a1*a3^2"));
    const Element expected = parse_element(g, "a2*a3");
    const auto p1 = property_one_holds(g, h);
    t.check(!p1.holds && p1.witness == expected, [&] { return std::string("property (1) witness is not a2*a3"); });
    t.check(index_of(g, h) == 8, [] { return std::string("index is not 8"); });
    t.check(!inverse_closed_transversal(g, h, true).has_value(), [] { return std::string("backtracking found a transversal"); });
    t.check(!brute_force_transversal_exists(g, h), [] { return std::string("brute force found a transversal"); });
  });
}

void constructions(SuiteResult& r, Tally& t, const SuiteOptions&) {
  const Bounds bounds = suite_bounds(r.max_order);
  for (const auto& [name, g] : standard_corpus(r.max_order)) {
    ++r.groups;
    t.guarded(name, [&, &name = name, &g = g] {
      for (const auto& h : all_subgroups(g, bounds)) {
        if (!is_normal(g, h) || !property_one_holds(g, h).holds) continue;
        const auto where = [&] { return name + " H=" + set_text(g, h.elements()); };
        const auto s = construct_connection_set_normal(g, h, false);
        t.check(is_perfect_code(CayleyGraph(g, s), h.elements()) && subgroup_code_transversal_check(g, h, s, false),
                [&] { return where() + ": perfect construction fails"; });
        if (h.order() % 2 != 0) continue;
        const auto rset = construct_connection_set_normal(g, h, true);
        const bool has_involution = std::any_of(rset.elements().begin(), rset.elements().end(), [&](Element x) {
          return h.contains(x) && g.is_involution(x);
        });
        t.check(is_total_perfect_code(CayleyGraph(g, rset), h.elements()) && has_involution,
                [&] { return where() + ": total construction fails"; });
      }
    });
  }
}

struct SuiteEntry {
  std::size_t default_order;
  void (*run)(SuiteResult&, Tally&, const SuiteOptions&);
};

const std::map<std::string, SuiteEntry>& registry() {
  static const std::map<std::string, SuiteEntry> table = {
      {"theorem3", {32, theorem3}},
      {"cor3", {60, cor3}},
      {"dihedral", {24, dihedral}},
      {"abelian", {32, abelian}},
      {"lemma-equivalence", {24, lemma_equivalence}},
      {"thm4a", {12, thm4a}},
      {"prop3", {12, prop3}},
      {"trivial-centre", {24, trivial_centre}},
      {"counterexample", {32, counterexample}},
      {"constructions", {32, constructions}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem3", "cor3", "dihedral", "abelian", "lemma-equivalence",
                                                 "thm4a", "prop3", "trivial-centre", "counterexample", "constructions"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ParseError("unknown suite '" + name + "'");
  SuiteResult result;
  result.name = name;
  result.max_order = options.max_order.value_or(it->second.default_order);
  Tally tally(result);
  const auto start = std::chrono::steady_clock::now();
  it->second.run(result, tally, options);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace cayleycodes
