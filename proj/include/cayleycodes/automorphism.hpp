#pragma once

#include <optional>
#include <vector>

#include "cayleycodes/bounds.hpp"
#include "cayleycodes/group.hpp"
#include "cayleycodes/subgroup.hpp"

namespace cayleycodes {

// An automorphism stored as the image of every element index.
class Automorphism {
 public:
  // Throws NotApplicable unless `images` is a bijective homomorphism of g.
  static Automorphism from_map(const FiniteGroup& g, std::vector<Element> images);
  static Automorphism identity(const FiniteGroup& g);

  Element operator()(Element x) const { return images_[x]; }
  const std::vector<Element>& map() const { return images_; }
  std::size_t size() const { return images_.size(); }
  bool is_identity() const;

  // (this * other)(x) = this(other(x))
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  // Image of a subset, sorted.
  ElementSet apply(const std::vector<Element>& subset) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism& a, const Automorphism& b) { return a.images_ <=> b.images_; }

 private:
  explicit Automorphism(std::vector<Element> images) : images_(std::move(images)) {}
  std::vector<Element> images_;
};

bool is_automorphism(const FiniteGroup& g, const std::vector<Element>& images);

// True iff sigma(x) lies in <x> for every x.
bool is_power_automorphism(const FiniteGroup& g, const Automorphism& sigma);

// x -> g x g^-1
Automorphism inner_automorphism(const FiniteGroup& g, Element by);

// x -> x^m; throws NotApplicable when that is not an automorphism.
Automorphism power_map(const FiniteGroup& g, long long m);

// Greedy generating set: elements taken by decreasing order (then index)
// whenever they enlarge the subgroup generated so far.
std::vector<Element> greedy_generators(const FiniteGroup& g);

// Every automorphism, sorted by image vector, via generator-image backtracking.
std::vector<Automorphism> all_automorphisms(const FiniteGroup& g, const Bounds& bounds = default_bounds());

// An isomorphism g -> h as an image vector, found by the same backtracking.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

// Closure test over a finite set of automorphisms.
bool is_closed_under_composition(const std::vector<Automorphism>& set);

}  // namespace cayleycodes
