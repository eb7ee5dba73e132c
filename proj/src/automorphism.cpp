#include "cayleycodes/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cayleycodes {

bool is_automorphism(const FiniteGroup& g, const std::vector<Element>& images) {
  const std::size_t n = g.order();
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto y : images) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (images[g.mul(x, y)] != g.mul(images[x], images[y])) return false;
  return true;
}

Automorphism Automorphism::from_map(const FiniteGroup& g, std::vector<Element> images) {
  if (!is_automorphism(g, images)) throw NotApplicable("map is not an automorphism");
  return Automorphism(std::move(images));
}

Automorphism Automorphism::identity(const FiniteGroup& g) {
  std::vector<Element> images(g.order());
  std::iota(images.begin(), images.end(), Element{0});
  return Automorphism(std::move(images));
}

bool Automorphism::is_identity() const {
  for (Element x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  std::vector<Element> images(images_.size());
  for (Element x = 0; x < images.size(); ++x) images[x] = images_[other.images_[x]];
  return Automorphism(std::move(images));
}

Automorphism Automorphism::inverse() const {
  std::vector<Element> images(images_.size());
  for (Element x = 0; x < images.size(); ++x) images[images_[x]] = x;
  return Automorphism(std::move(images));
}

ElementSet Automorphism::apply(const std::vector<Element>& subset) const {
  std::vector<Element> out;
  out.reserve(subset.size());
  for (auto x : subset) out.push_back(images_[x]);
  return make_element_set(std::move(out));
}

bool is_power_automorphism(const FiniteGroup& g, const Automorphism& sigma) {
  for (Element x = 0; x < g.order(); ++x) {
    const Element target = sigma(x);
    Element p = g.identity();
    bool found = false;
    for (std::size_t k = 0; k < g.element_order(x) && !found; ++k) {
      found = p == target;
      p = g.mul(p, x);
    }
    if (!found) return false;
  }
  return true;
}

Automorphism inner_automorphism(const FiniteGroup& g, Element by) {
  std::vector<Element> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = g.conjugate(by, x);
  return Automorphism::from_map(g, std::move(images));
}

Automorphism power_map(const FiniteGroup& g, long long m) {
  std::vector<Element> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = g.pow(x, m);
  return Automorphism::from_map(g, std::move(images));
}

std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> order(g.order());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Element> gens;
  Subgroup span = trivial_subgroup(g);
  for (auto x : order) {
    if (span.order() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

namespace {

// Homomorphisms from `source` into `target` determined by the images of a
// fixed generating set, with consistency checked prefix by prefix.
class ImageSearch {
 public:
  ImageSearch(const FiniteGroup& source, const FiniteGroup& target, bool stop_at_first)
      : source_(source), target_(target), gens_(greedy_generators(source)), stop_(stop_at_first) {
    for (auto s : gens_) {
      std::vector<Element> cands;
      for (Element y = 0; y < target.order(); ++y)
        if (target.element_order(y) == source.element_order(s)) cands.push_back(y);
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens_.size());
  }

  std::vector<std::vector<Element>> run() {
    if (source_.order() == target_.order()) descend(0);
    return std::move(found_);
  }

 private:
  // Extends the map over <gens[0..k)>; false if not a well-defined injective homomorphism.
  bool extend(std::size_t k, std::vector<Element>& phi) const {
    constexpr auto unset = static_cast<Element>(-1);
    phi.assign(source_.order(), unset);
    std::vector<bool> used(target_.order(), false);
    std::vector<Element> queue{source_.identity()};
    phi[source_.identity()] = target_.identity();
    used[target_.identity()] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element x = queue[q];
      for (std::size_t i = 0; i < k; ++i) {
        const Element y = source_.mul(x, gens_[i]);
        const Element image = target_.mul(phi[x], images_[i]);
        if (phi[y] == unset) {
          if (used[image]) return false;
          used[image] = true;
          phi[y] = image;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (stop_ && !found_.empty()) return;
    std::vector<Element> phi;
    if (k == gens_.size()) {
      if (extend(k, phi)) found_.push_back(std::move(phi));
      return;
    }
    for (auto c : candidates_[k]) {
      images_[k] = c;
      if (extend(k + 1, phi)) descend(k + 1);
      if (stop_ && !found_.empty()) return;
    }
  }

  const FiniteGroup& source_;
  const FiniteGroup& target_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<std::vector<Element>> found_;
  bool stop_;
};

}  // namespace

std::vector<Automorphism> all_automorphisms(const FiniteGroup& g, const Bounds& bounds) {
  if (g.order() > bounds.automorphism_max_order)
    throw BoundExceeded("all_automorphisms: group order", g.order(), bounds.automorphism_max_order);
  std::vector<Automorphism> result;
  for (auto& images : ImageSearch(g, g, false).run()) result.push_back(Automorphism::from_map(g, std::move(images)));
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order() || order_statistics(g) != order_statistics(h)) return std::nullopt;
  auto found = ImageSearch(g, h, true).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_closed_under_composition(const std::vector<Automorphism>& set) {
  std::set<Automorphism> members(set.begin(), set.end());
  for (const auto& a : set) {
    if (!members.count(a.inverse())) return false;
    for (const auto& b : set)
      if (!members.count(a.compose(b))) return false;
  }
  return true;
}

}  // namespace cayleycodes
