#include <doctest.h>

#include <complex>
#include <random>

#include "cayleycodes/characters.hpp"
#include "cayleycodes/corpus.hpp"
#include "cayleycodes/group_ring.hpp"
#include "cayleycodes/pcp.hpp"
#include "oracles.hpp"

using namespace cayleycodes;

namespace {

std::complex<double> value(const CyclotomicSum& s) { return {s.real(), s.imag()}; }

oracle::Set random_subset(std::mt19937_64& rng, std::size_t n) {
  return oracle::from_mask(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng), n);
}

// Every tiling pair (A, B) of g with e in both, by subset sweep.
std::vector<std::pair<oracle::Set, oracle::Set>> tilings(const FiniteGroup& g) {
  std::vector<std::pair<oracle::Set, oracle::Set>> out;
  const std::size_t n = g.order();
  for (std::uint64_t ma = 1; ma < (std::uint64_t{1} << n); ma += 2)
    for (std::uint64_t mb = 1; mb < (std::uint64_t{1} << n); mb += 2) {
      const auto a = oracle::from_mask(ma, n), b = oracle::from_mask(mb, n);
      if (a.size() * b.size() == n && oracle::tiles(g, a, b)) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == IntPoly{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
  for (std::size_t m = 1; m <= 40; ++m) {
    const auto& red = cyclotomic_reductions(m);
    REQUIRE(red.size() == m);
    const std::size_t deg = cyclotomic_polynomial(m).size() - 1;
    IntPoly one(deg, 0);
    one[0] = 1;
    CHECK(red[0] == one);
    // each row evaluated at zeta_m must give zeta_m^k back
    const auto zeta = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(m));
    for (std::size_t k = 0; k < m; ++k) {
      std::complex<double> v = 0;
      for (std::size_t j = 0; j < red[k].size(); ++j) v += static_cast<double>(red[k][j]) * std::pow(zeta, static_cast<int>(j));
      CHECK(std::abs(v - std::pow(zeta, static_cast<int>(k))) < 1e-9);
    }
  }
}

TEST_CASE("exact zero test against floating point") {
  std::mt19937_64 rng(7);
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 1 + rng() % 36;
    CyclotomicSum s(m);
    // sums over cosets of the d-th roots vanish; add a few, then maybe perturb
    for (int k = 0; k < 3; ++k) {
      std::size_t d = 1 + rng() % m;
      while (m % d != 0) --d;
      if (d == 1) continue;
      const std::size_t shift = rng() % m;
      const std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
      for (std::size_t j = 0; j < d; ++j) s.add_power(shift + j * (m / d), c);
    }
    if (rng() % 2) s.add_power(rng() % m, static_cast<std::int64_t>(rng() % 3) + 1);
    CAPTURE(m);
    CAPTURE(s.coeffs());
    CHECK(s.is_zero() == (std::abs(value(s)) < 1e-9));
  }
  CHECK(CyclotomicSum::integer(5, 0).is_zero());
  CHECK_FALSE(CyclotomicSum::integer(5, 3).is_zero());
  CyclotomicSum i(4);
  i.add_power(1);
  CHECK((i * i + CyclotomicSum::integer(4, 1)).is_zero());
  CHECK(std::abs(value(i * i * i) - std::complex<double>(0, -1)) < 1e-12);
  CyclotomicSum a(6), b(6);
  for (std::size_t t = 0; t < 50; ++t) {
    a = CyclotomicSum(6);
    b = CyclotomicSum(6);
    for (int k = 0; k < 6; ++k) {
      a.add_power(rng() % 6, static_cast<std::int64_t>(rng() % 7) - 3);
      b.add_power(rng() % 6, static_cast<std::int64_t>(rng() % 7) - 3);
    }
    CHECK(std::abs(value(a * b) - value(a) * value(b)) < 1e-9);
    CHECK(std::abs(value(a - b) - (value(a) - value(b))) < 1e-9);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("characters of small abelian groups") {
  const auto z2 = characters(make_cyclic(2));
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].is_trivial());
  CHECK(z2[1].value_power == std::vector<std::size_t>{0, 1});
  const auto z4 = characters(make_cyclic(4));
  REQUIRE(z4.size() == 4);
  CHECK(z4[1].value_power == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(z4[2].value_power == std::vector<std::size_t>{0, 2, 0, 2});
  const auto v4 = characters(make_abelian({2, 2}));
  REQUIRE(v4.size() == 4);
  for (const auto& rho : v4)
    for (auto k : rho.value_power) CHECK((k == 0 || k == 2));
  CHECK_THROWS_AS(characters(make_dihedral(3)), NotApplicable);

  for (const auto& [name, g] : abelian_corpus(24)) {
    CAPTURE(name);
    const auto chars = characters(g);
    REQUIRE(chars.size() == g.order());
    CHECK(chars.front().is_trivial());
    const std::size_t m = g.order();
    std::vector<Element> all(m);
    std::iota(all.begin(), all.end(), Element{0});
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& rho : chars) {
      distinct.insert(rho.value_power);
      for (Element x = 0; x < m; ++x)
        for (Element y = 0; y < m; ++y)
          CHECK(rho.value_power[g.mul(x, y)] == (rho.value_power[x] + rho.value_power[y]) % m);
      const auto total = char_sum(rho, all);
      CHECK(total.is_zero() == !rho.is_trivial());
      if (rho.is_trivial()) CHECK(std::abs(value(total) - static_cast<double>(m)) < 1e-9);
    }
    CHECK(distinct.size() == m);
  }
}

TEST_CASE("character sums") {
  const auto g = make_cyclic(4);
  const auto chars = characters(g);
  CHECK_FALSE(char_sum(chars[1], {0, 1}).is_zero());
  CHECK(char_sum(chars[2], {0, 1}).is_zero());
  CHECK(char_sum(chars[1], {}).is_zero());
  std::mt19937_64 rng(11);
  for (const auto& [name, grp] : abelian_corpus(16)) {
    const auto cs = characters(grp);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_subset(rng, grp.order());
      for (const auto& rho : cs) {
        const auto exact = char_sum(rho, a);
        const auto approx = oracle::numeric_sum(rho.value_power, grp.order(), a);
        CHECK(std::abs(value(exact) - approx) < 1e-9);
        CHECK(exact.is_zero() == (std::abs(approx) < 1e-9));
      }
    }
  }
}

TEST_CASE("spectral tiling test") {
  const auto z4 = make_cyclic(4);
  CHECK(spectral_tiling_check(z4, {0, 1}, {0, 2}));
  CHECK_FALSE(spectral_tiling_check(z4, {0, 1}, {0, 1}));
  CHECK_FALSE(spectral_tiling_check(z4, {}, {0, 1, 2, 3}));
  CHECK(spectral_tiling_check(z4, {0}, {0, 1, 2, 3}));
  const auto z6 = make_cyclic(6);
  CHECK(spectral_tiling_check(z6, {0, 1, 5}, {0, 3}));
  CHECK_FALSE(spectral_tiling_check(z6, {0, 1, 2}, {0, 2}));
}

TEST_CASE("spectral test agrees with the group ring") {
  // every pair of subsets in groups of order <= 8
  for (const auto& [name, g] : abelian_corpus(8)) {
    CAPTURE(name);
    const std::size_t n = g.order();
    for (std::uint64_t ma = 0; ma < (std::uint64_t{1} << n); ++ma)
      for (std::uint64_t mb = 0; mb < (std::uint64_t{1} << n); ++mb) {
        const auto a = oracle::from_mask(ma, n), b = oracle::from_mask(mb, n);
        REQUIRE(verify_lemma_equivalence(g, a, b) == oracle::tiles(g, a, b));
      }
  }
  std::mt19937_64 rng(12);
  for (const auto& [name, g] : abelian_corpus(24, 9)) {
    CAPTURE(name);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_subset(rng, g.order());
      const auto b = random_subset(rng, g.order());
      CHECK(verify_lemma_equivalence(g, a, b) == oracle::tiles(g, a, b));
      CHECK(spectral_tiling_check(g, a, b) == spectral_tiling_check_serial(g, a, b));
    }
    // closed balls against perfect codes of random Cayley graphs
    const auto orbits = inverse_orbits(g);
    for (int t = 0; t < 10; ++t) {
      const auto s = connection_set_from_orbits(g, orbits, rng() & ((std::uint64_t{1} << orbits.size()) - 1));
      auto ball = s.elements();
      ball.push_back(g.identity());
      for (const auto& c : enumerate_perfect_codes(CayleyGraph(g, s), false)) {
        CHECK(spectral_tiling_check(g, ball, c));
        CHECK(spectral_tiling_check(g, c, ball));
      }
    }
  }
}

TEST_CASE("tilings move under power automorphisms") {
  const auto z6 = make_cyclic(6);
  CHECK(power_automorphism_tiling_transport(z6, {0, 1, 5}, {0, 3}, power_map(z6, -1)));
  const auto z8 = make_cyclic(8);
  const auto cube = power_map(z8, 3);
  CHECK(cube.apply({0, 1}) == ElementSet{0, 3});
  CHECK(power_automorphism_tiling_transport(z8, {0, 1}, {0, 2, 4, 6}, cube));
  CHECK_THROWS_AS(power_automorphism_tiling_transport(z8, {0, 1}, {0, 1, 2, 3}, cube), NotApplicable);
  const auto v4 = make_abelian({2, 2});
  const auto swap = Automorphism::from_map(v4, {0, 2, 1, 3});
  CHECK_THROWS_AS(power_automorphism_tiling_transport(v4, {0, 1}, {0, 2}, swap), NotApplicable);

  for (const auto& [name, g] : abelian_corpus(12)) {
    CAPTURE(name);
    const auto powers = all_power_automorphisms(g);
    for (const auto& [a, b] : tilings(g))
      for (const auto& sigma : powers) {
        CHECK(power_automorphism_tiling_transport(g, a, b, sigma));
        CHECK(oracle::tiles(g, sigma.apply(a), b));
      }
  }
}
