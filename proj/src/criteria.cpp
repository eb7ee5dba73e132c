#include "cayleycodes/criteria.hpp"

#include <algorithm>
#include <set>

namespace cayleycodes {

const char* to_string(Method method) {
  switch (method) {
    case Method::property1: return "property1";
    case Method::parity: return "parity";
    case Method::cyclic: return "cyclic";
    case Method::abelian_projection: return "abelian-projection";
    case Method::dihedral: return "dihedral";
    case Method::generic_search: return "generic-search";
  }
  return "unknown";
}

PropertyOneResult property_one_holds(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x) {
    if (!h.contains(g.mul(x, x))) continue;
    const bool rescued = std::any_of(h.elements().begin(), h.elements().end(), [&](Element y) {
      const Element xy = g.mul(x, y);
      return g.mul(xy, xy) == g.identity();
    });
    if (!rescued) return {false, x};
  }
  return {true, std::nullopt};
}

namespace {

void require_normal(const FiniteGroup& g, const Subgroup& h, const char* who) {
  if (!is_normal(g, h)) throw NotApplicable(std::string(who) + " requires a normal subgroup");
}

}  // namespace

Element total_code_involution(const FiniteGroup& g, const Subgroup& h) {
  for (auto x : h.elements())
    if (g.is_involution(x)) return x;
  throw NotApplicable("subgroup of odd order has no involution");
}

ConnectionSet construct_connection_set_normal(const FiniteGroup& g, const Subgroup& h, bool total) {
  require_normal(g, h, "construct_connection_set_normal");
  if (const auto p1 = property_one_holds(g, h); !p1.holds) throw PropertyOneFails(*p1.witness);
  if (total && h.order() % 2 != 0) throw NotApplicable("total construction needs a subgroup of even order");

  const auto ids = left_coset_ids(g, h);
  const auto blocks = left_cosets(g, h);
  std::vector<bool> handled(blocks.size(), false);
  handled[ids[g.identity()]] = true;
  std::vector<Element> s;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    if (handled[c]) continue;
    const Element x = blocks[c].front();
    handled[c] = true;
    if (h.contains(g.mul(x, x))) {
      // xH is an involution of G/H: replace x by the least x h that squares to e.
      auto it = std::find_if(h.elements().begin(), h.elements().end(), [&](Element y) {
        const Element xy = g.mul(x, y);
        return g.mul(xy, xy) == g.identity();
      });
      if (it == h.elements().end()) throw Defect("property (1) held but an involution coset has no fixer");
      s.push_back(g.mul(x, *it));
    } else {
      s.push_back(x);
      s.push_back(g.inv(x));
      handled[ids[g.inv(x)]] = true;
    }
  }
  if (total) s.push_back(total_code_involution(g, h));
  return ConnectionSet::make(g, std::move(s));
}

CriterionVerdict normal_subgroup_code(const FiniteGroup& g, const Subgroup& h) {
  require_normal(g, h, "normal_subgroup_code");
  const auto p1 = property_one_holds(g, h);
  CriterionVerdict v;
  v.method = Method::property1;
  v.perfect = p1.holds;
  v.total = p1.holds && h.order() % 2 == 0;
  if (p1.holds)
    v.witness = construct_connection_set_normal(g, h, false);
  else
    v.witness = FailingElement{*p1.witness};
  return v;
}

std::optional<CriterionVerdict> parity_criterion(const FiniteGroup& g, const Subgroup& h) {
  require_normal(g, h, "parity_criterion");
  const bool h_odd = h.order() % 2 != 0;
  const bool index_odd = index_of(g, h) % 2 != 0;
  if (!h_odd && !index_odd) return std::nullopt;
  CriterionVerdict v;
  v.method = Method::parity;
  v.perfect = true;
  v.total = !h_odd && index_odd;
  return v;
}

CriterionVerdict cyclic_criterion(const FiniteGroup& g, const Subgroup& h) {
  if (!is_cyclic_group(g)) throw NotApplicable("cyclic_criterion requires a cyclic group");
  const bool h_odd = h.order() % 2 != 0;
  const bool index_odd = index_of(g, h) % 2 != 0;
  CriterionVerdict v;
  v.method = Method::cyclic;
  v.perfect = h_odd || index_odd;
  v.total = !h_odd && index_odd;
  return v;
}

SylowReduction abelian_sylow_reduction(const FiniteGroup& g, const Subgroup& h) {
  if (!g.is_abelian()) throw NotApplicable("abelian_sylow_reduction requires an abelian group");
  Subgroup p = sylow_two_subgroup(g);
  Subgroup cap = intersect(g, h, p);
  return {std::move(p), std::move(cap)};
}

AbelianTwoGroupBasis two_group_basis(const FiniteGroup& g, const Subgroup& p, std::optional<std::uint64_t> shuffle_seed) {
  for (auto x : p.elements()) {
    const auto k = g.element_order(x);
    if ((k & (k - 1)) != 0) throw NotApplicable("two_group_basis requires a 2-group");
  }
  return find_abelian_basis(g, p, shuffle_seed);
}

CriterionVerdict abelian_criterion(const FiniteGroup& g, const Subgroup& h, const AbelianTwoGroupBasis& basis) {
  const auto [p, cap] = abelian_sylow_reduction(g, h);
  if (!is_cyclic(g, cap)) throw NotApplicable("abelian_criterion requires H n P to be cyclic");
  for (auto x : p.elements())
    if (basis.exponents.at(x).size() != basis.rank()) throw NotApplicable("basis does not decompose the Sylow 2-subgroup");
  bool projects = false;
  for (std::size_t i = 0; i < basis.rank() && !projects; ++i) {
    std::set<std::size_t> image;
    for (auto x : cap.elements()) image.insert(basis.projection(i, x));
    projects = image.size() == basis.orders[i];
  }
  CriterionVerdict v;
  v.method = Method::abelian_projection;
  v.perfect = cap.is_trivial() || projects;
  v.total = projects;
  return v;
}

CriterionVerdict abelian_criterion(const FiniteGroup& g, const Subgroup& h) {
  const auto reduction = abelian_sylow_reduction(g, h);
  if (!is_cyclic(g, reduction.intersection)) throw NotApplicable("abelian_criterion requires H n P to be cyclic");
  return abelian_criterion(g, h, two_group_basis(g, reduction.sylow));
}

CriterionVerdict dihedral_cyclic_criterion(std::size_t n, std::size_t t) {
  if (t == 0 || n % t != 0) throw NotApplicable("dihedral_cyclic_criterion requires t to divide n");
  const bool t_odd = t % 2 != 0;
  const bool quotient_odd = (n / t) % 2 != 0;
  CriterionVerdict v;
  v.method = Method::dihedral;
  v.perfect = t_odd || quotient_odd;
  v.total = t_odd && !quotient_odd;
  return v;
}

std::optional<std::pair<std::size_t, std::size_t>> dihedral_parameters(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = g.dihedral_degree();
  if (n == 0) throw NotApplicable("dihedral_parameters requires a dihedral group");
  std::size_t rotations = 0;
  std::optional<std::size_t> s;
  for (auto x : h.elements()) {
    if (x < n)
      ++rotations;
    else if (!s)
      s = x - n;
  }
  if (!s) return std::nullopt;
  return std::make_pair(n / rotations, *s);
}

DihedralSets dihedral_construct_sets(const FiniteGroup& g, std::size_t t, std::size_t s) {
  const std::size_t n = g.dihedral_degree();
  if (n == 0) throw NotApplicable("dihedral_construct_sets requires a dihedral group");
  if (t <= 1 || n % t != 0 || s >= t)
    throw NotApplicable("dihedral_construct_sets needs t > 1 dividing n and 0 <= s < t");
  const Element a = 1;
  const auto b = static_cast<Element>(n);
  std::vector<Element> r, sset;
  for (std::size_t i = 0; i < t; ++i) r.push_back(g.mul(b, g.pow(a, static_cast<long long>(i))));
  for (std::size_t j = 1; j < t; ++j)
    sset.push_back(g.mul(g.pow(a, static_cast<long long>(s) - static_cast<long long>(j)), b));
  return {ConnectionSet::make(g, std::move(r)), ConnectionSet::make(g, std::move(sset))};
}

CriterionVerdict dihedral_criterion(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = g.dihedral_degree();
  if (n == 0) throw NotApplicable("dihedral_criterion requires a dihedral group");
  if (h.order() == g.order()) throw NotApplicable("dihedral_criterion covers proper subgroups only");
  if (const auto params = dihedral_parameters(g, h)) {
    CriterionVerdict v;
    v.method = Method::dihedral;
    v.perfect = true;
    v.total = true;
    v.witness = dihedral_construct_sets(g, params->first, params->second).perfect_set;
    return v;
  }
  return dihedral_cyclic_criterion(n, n / h.order());
}

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const FiniteGroup& g, const Subgroup& h, bool contains_identity)
      : g_(g), ids_(left_coset_ids(g, h)), blocks_(left_cosets(g, h)), with_e_(contains_identity),
        assigned_(blocks_.size(), unset) {}

  std::optional<ElementSet> run() {
    if (with_e_) assigned_[ids_[g_.identity()]] = g_.identity();
    if (!descend()) return std::nullopt;
    return make_element_set(assigned_);
  }

 private:
  static constexpr Element unset = static_cast<Element>(-1);

  bool descend() {
    const auto open = std::find(assigned_.begin(), assigned_.end(), unset);
    if (open == assigned_.end()) return true;
    const auto c = static_cast<std::size_t>(open - assigned_.begin());
    for (auto x : blocks_[c]) {
      if (x == g_.identity()) continue;
      const Element y = g_.inv(x);
      const auto cy = ids_[y];
      if (cy == c) {
        if (y != x) continue;
        assigned_[c] = x;
        if (descend()) return true;
        assigned_[c] = unset;
      } else {
        if (assigned_[cy] != unset) continue;
        assigned_[c] = x;
        assigned_[cy] = y;
        if (descend()) return true;
        assigned_[c] = unset;
        assigned_[cy] = unset;
      }
    }
    return false;
  }

  const FiniteGroup& g_;
  std::vector<std::size_t> ids_;
  std::vector<ElementSet> blocks_;
  bool with_e_;
  std::vector<Element> assigned_;
};

void check_generic_bound(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds) {
  if (index_of(g, h) > bounds.generic_max_index && g.order() > bounds.generic_max_order)
    throw BoundExceeded("generic_subgroup_code_decision: group order", g.order(), bounds.generic_max_order);
}

bool within_generic_bound(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds) {
  return index_of(g, h) <= bounds.generic_max_index || g.order() <= bounds.generic_max_order;
}

}  // namespace

std::optional<ElementSet> inverse_closed_transversal(const FiniteGroup& g, const Subgroup& h, bool contains_identity) {
  return TransversalSearch(g, h, contains_identity).run();
}

CriterionVerdict generic_subgroup_code_decision(const FiniteGroup& g, const Subgroup& h, bool total,
                                                const Bounds& bounds) {
  check_generic_bound(g, h, bounds);
  const auto perfect_l = inverse_closed_transversal(g, h, true);
  const auto total_l = inverse_closed_transversal(g, h, false);
  CriterionVerdict v;
  v.method = Method::generic_search;
  v.perfect = perfect_l.has_value();
  v.total = total_l.has_value();
  if (!total && perfect_l) {
    std::vector<Element> s;
    for (auto x : *perfect_l)
      if (x != g.identity()) s.push_back(x);
    v.witness = ConnectionSet::make(g, std::move(s));
  } else if (total && total_l) {
    v.witness = ConnectionSet::make(g, *total_l);
  }
  return v;
}

namespace {

template <class Sink>
void run_applicable(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds, Sink&& sink) {
  const bool normal = is_normal(g, h);
  // The cyclic criterion is complete and subsumes the parity shortcut.
  const bool cyclic = is_cyclic_group(g);
  if (cyclic)
    if (sink(cyclic_criterion(g, h))) return;
  if (normal && !cyclic)
    if (auto v = parity_criterion(g, h))
      if (sink(std::move(*v))) return;
  if (g.is_abelian() && is_cyclic(g, abelian_sylow_reduction(g, h).intersection))
    if (sink(abelian_criterion(g, h))) return;
  if (g.dihedral_degree() != 0 && h.order() != g.order())
    if (sink(dihedral_criterion(g, h))) return;
  if (normal)
    if (sink(normal_subgroup_code(g, h))) return;
  if (within_generic_bound(g, h, bounds)) sink(generic_subgroup_code_decision(g, h, false, bounds));
}

}  // namespace

CriterionVerdict classify_subgroup(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds) {
  std::optional<CriterionVerdict> out;
  run_applicable(g, h, bounds, [&](CriterionVerdict v) {
    out = std::move(v);
    return true;
  });
  if (!out) throw BoundExceeded("classify_subgroup: no criterion applies and group order", g.order(), bounds.generic_max_order);
  return std::move(*out);
}

std::vector<CriterionVerdict> all_applicable_verdicts(const FiniteGroup& g, const Subgroup& h, const Bounds& bounds) {
  std::vector<CriterionVerdict> out;
  run_applicable(g, h, bounds, [&](CriterionVerdict v) {
    out.push_back(std::move(v));
    return false;
  });
  return out;
}

}  // namespace cayleycodes
