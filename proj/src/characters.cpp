#include "cayleycodes/characters.hpp"

#include <algorithm>

#include "cayleycodes/group_ring.hpp"
#include "cayleycodes/parallel.hpp"

namespace cayleycodes {

bool Character::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](std::size_t n) { return n == 0; });
}

std::vector<Character> characters(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotApplicable("characters are computed for abelian groups only");
  const AbelianBasis basis = abelian_decomposition(g);
  const std::size_t m = g.order();
  std::vector<Character> out;
  out.reserve(m);
  std::vector<std::size_t> tuple(basis.rank(), 0);
  while (true) {
    Character rho{tuple, basis.orders, std::vector<std::size_t>(m, 0)};
    for (Element x = 0; x < m; ++x) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < basis.rank(); ++j)
        k += tuple[j] * basis.projection(j, x) % basis.orders[j] * (m / basis.orders[j]);
      rho.value_power[x] = k % m;
    }
    out.push_back(std::move(rho));
    // next tuple, last coordinate fastest
    std::size_t j = basis.rank();
    while (j > 0) {
      if (++tuple[j - 1] < basis.orders[j - 1]) break;
      tuple[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

CyclotomicSum char_sum(const Character& rho, const std::vector<Element>& a) {
  CyclotomicSum s(rho.value_power.size());
  for (auto x : make_element_set(a)) s.add_power(rho.value_power.at(x));
  return s;
}

namespace {

bool character_condition(const Character& rho, const ElementSet& all, const std::vector<Element>& a,
                         const std::vector<Element>& b) {
  return (char_sum(rho, a) * char_sum(rho, b) - char_sum(rho, all)).is_zero();
}

ElementSet whole(const FiniteGroup& g) {
  ElementSet all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  return all;
}

}  // namespace

bool spectral_tiling_check(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b) {
  const auto chars = characters(g);
  const auto all = whole(g);
  const auto ok = parallel_map(chars.size(), [&](std::size_t i) { return character_condition(chars[i], all, a, b); });
  return std::all_of(ok.begin(), ok.end(), [](bool v) { return v; });
}

bool spectral_tiling_check_serial(const FiniteGroup& g, const std::vector<Element>& a,
                                  const std::vector<Element>& b) {
  const auto chars = characters(g);
  const auto all = whole(g);
  return std::all_of(chars.begin(), chars.end(), [&](const Character& rho) {
    return character_condition(rho, all, a, b);
  });
}

bool verify_lemma_equivalence(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b) {
  const bool spectral = spectral_tiling_check_serial(g, a, b);
  const bool ring = group_ring_tiles(g, a, b);
  if (spectral != ring)
    throw Defect("spectral and group-ring tiling checks disagree (spectral=" + std::to_string(spectral) +
                 ", group ring=" + std::to_string(ring) + ")");
  return ring;
}

bool power_automorphism_tiling_transport(const FiniteGroup& g, const std::vector<Element>& a,
                                         const std::vector<Element>& b, const Automorphism& sigma) {
  if (!is_power_automorphism(g, sigma)) throw NotApplicable("sigma is not a power automorphism");
  if (!group_ring_tiles(g, a, b)) throw NotApplicable("(A, B) is not a tiling of G");
  return group_ring_tiles(g, sigma.apply(a), b);
}

}  // namespace cayleycodes
