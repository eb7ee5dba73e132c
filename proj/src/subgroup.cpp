#include "cayleycodes/subgroup.hpp"

#include <algorithm>
#include <set>

namespace cayleycodes {

Subgroup::Subgroup(ElementSet elements, std::vector<Element> generators, std::size_t parent_order)
    : elements_(std::move(elements)), generators_(std::move(generators)), member_(parent_order, false) {
  for (auto x : elements_) member_[x] = true;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  return a.elements_ <=> b.elements_;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<Element>& generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> elements{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (auto s : generators) {
      const Element p = g.mul(elements[k], s);
      if (!seen[p]) {
        seen[p] = true;
        elements.push_back(p);
      }
    }
  std::sort(elements.begin(), elements.end());
  return Subgroup(std::move(elements), generators, g.order());
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return subgroup_generated(g, all);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return subgroup_generated(g, {}); }

bool is_subgroup(const FiniteGroup& g, const ElementSet& elements) {
  std::vector<bool> in(g.order(), false);
  for (auto x : elements) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.identity()]) return false;
  for (auto x : elements) {
    if (!in[g.inv(x)]) return false;
    for (auto y : elements)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Bounds& bounds) {
  if (g.order() > bounds.subgroup_max_order)
    throw BoundExceeded("all_subgroups: group order", g.order(), bounds.subgroup_max_order);
  std::set<ElementSet> seen;
  std::vector<Subgroup> found{trivial_subgroup(g)};
  seen.insert(found.front().elements());
  for (std::size_t k = 0; k < found.size(); ++k) {
    // found may reallocate below; copy what we need.
    const Subgroup current = found[k];
    std::vector<bool> covered(g.order(), false);
    for (auto x : current.elements()) covered[x] = true;
    for (Element x = 0; x < g.order(); ++x) {
      if (covered[x]) continue;
      // <K, xk> = <K, x> for k in K.
      for (auto h : current.elements()) covered[g.mul(x, h)] = true;
      std::vector<Element> gens = current.generators();
      gens.push_back(x);
      Subgroup joined = subgroup_generated(g, gens);
      if (seen.insert(joined.elements()).second) found.push_back(std::move(joined));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (auto y : h.elements())
      if (!h.contains(g.conjugate(x, y))) return false;
  return true;
}

std::size_t index_of(const FiniteGroup& g, const Subgroup& h) { return g.order() / h.order(); }

namespace {

std::vector<std::size_t> coset_ids(const FiniteGroup& g, const Subgroup& h, bool left) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(g.order(), unset);
  std::size_t next = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (ids[x] != unset) continue;
    for (auto y : h.elements()) ids[left ? g.mul(x, y) : g.mul(y, x)] = next;
    ++next;
  }
  return ids;
}

std::vector<ElementSet> blocks_from_ids(const std::vector<std::size_t>& ids) {
  std::vector<ElementSet> blocks;
  for (Element x = 0; x < ids.size(); ++x) {
    if (ids[x] >= blocks.size()) blocks.resize(ids[x] + 1);
    blocks[ids[x]].push_back(x);
  }
  return blocks;
}

}  // namespace

std::vector<std::size_t> left_coset_ids(const FiniteGroup& g, const Subgroup& h) { return coset_ids(g, h, true); }
std::vector<std::size_t> right_coset_ids(const FiniteGroup& g, const Subgroup& h) { return coset_ids(g, h, false); }

std::vector<ElementSet> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  return blocks_from_ids(left_coset_ids(g, h));
}

std::vector<ElementSet> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  return blocks_from_ids(right_coset_ids(g, h));
}

Subgroup intersect(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return subgroup_generated(g, common);
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](Element x) { return g.element_order(x) == h.order(); });
}

Subgroup sylow_two_subgroup(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotApplicable("sylow_two_subgroup requires an abelian group");
  std::vector<Element> two_power;
  for (Element x = 0; x < g.order(); ++x) {
    const auto k = g.element_order(x);
    if ((k & (k - 1)) == 0) two_power.push_back(x);
  }
  return subgroup_generated(g, two_power);
}

}  // namespace cayleycodes
