#pragma once

#include <vector>

#include "cayleycodes/abelian.hpp"
#include "cayleycodes/automorphism.hpp"
#include "cayleycodes/cyclotomic.hpp"
#include "cayleycodes/group.hpp"

namespace cayleycodes {

// A character of an abelian group: exponents n_j against a decomposition
// with orders m_j. Values are powers of zeta_m, m = |G|.
struct Character {
  std::vector<std::size_t> exponents;
  std::vector<std::size_t> orders;
  // value_power[x] = k with rho(x) = zeta_m^k
  std::vector<std::size_t> value_power;

  bool is_trivial() const;
};

// All |G| characters over abelian_decomposition(g), trivial first, in
// lexicographic order of exponent tuples. Throws NotApplicable for
// non-abelian g.
std::vector<Character> characters(const FiniteGroup& g);

// sum over x in A of rho(x), exactly.
CyclotomicSum char_sum(const Character& rho, const std::vector<Element>& a);

// (sum_A rho)(sum_B rho) == sum_G rho for every character rho. Characters
// are checked in parallel.
bool spectral_tiling_check(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b);
bool spectral_tiling_check_serial(const FiniteGroup& g, const std::vector<Element>& a,
                                  const std::vector<Element>& b);

// Computes both the spectral check and the group-ring check; throws Defect
// when they disagree.
bool verify_lemma_equivalence(const FiniteGroup& g, const std::vector<Element>& a, const std::vector<Element>& b);

// For a tiling (A, B) and a power automorphism sigma, whether (A^sigma, B)
// tiles too. Throws NotApplicable when (A, B) is not a tiling or sigma is
// not a power automorphism.
bool power_automorphism_tiling_transport(const FiniteGroup& g, const std::vector<Element>& a,
                                         const std::vector<Element>& b, const Automorphism& sigma);

}  // namespace cayleycodes
