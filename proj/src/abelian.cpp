#include "cayleycodes/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace cayleycodes {

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_power_of(std::size_t value, std::size_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

class BasisSearch {
 public:
  BasisSearch(const FiniteGroup& g, std::vector<Element> candidates, std::size_t target)
      : g_(g), candidates_(std::move(candidates)), target_(target) {}

  std::vector<Element> run() {
    std::vector<bool> span(g_.order(), false);
    span[g_.identity()] = true;
    descend(span, 1, g_.order() + 1);
    return found_;
  }

 private:
  bool descend(const std::vector<bool>& span, std::size_t size, std::size_t max_order) {
    if (size == target_) {
      found_ = chosen_;
      return true;
    }
    for (auto c : candidates_) {
      const auto ord = g_.element_order(c);
      if (ord > max_order || span[c] || target_ % (size * ord) != 0) continue;
      // <span> and <c> meet trivially iff no proper power of c lies in span.
      bool independent = true;
      Element p = c;
      for (std::size_t k = 1; k < ord && independent; ++k, p = g_.mul(p, c)) independent = !span[p];
      if (!independent) continue;
      std::vector<bool> next(g_.order(), false);
      for (Element x = 0; x < g_.order(); ++x) {
        if (!span[x]) continue;
        Element y = x;
        for (std::size_t k = 0; k < ord; ++k, y = g_.mul(y, c)) next[y] = true;
      }
      chosen_.push_back(c);
      if (descend(next, size * ord, ord)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const FiniteGroup& g_;
  std::vector<Element> candidates_;
  std::size_t target_;
  std::vector<Element> chosen_;
  std::vector<Element> found_;
};

AbelianBasis with_exponents(const FiniteGroup& g, std::vector<Element> gens) {
  AbelianBasis basis;
  basis.generators = std::move(gens);
  for (auto x : basis.generators) basis.orders.push_back(g.element_order(x));
  basis.exponents.assign(g.order(), {});
  std::vector<std::size_t> digits(basis.rank(), 0);
  const std::size_t total =
      std::accumulate(basis.orders.begin(), basis.orders.end(), std::size_t{1}, std::multiplies<>());
  for (std::size_t index = 0; index < total; ++index) {
    std::size_t rest = index;
    Element x = g.identity();
    for (std::size_t k = basis.rank(); k-- > 0;) {
      digits[k] = rest % basis.orders[k];
      rest /= basis.orders[k];
    }
    for (std::size_t k = 0; k < basis.rank(); ++k) x = g.mul(x, g.pow(basis.generators[k], static_cast<long long>(digits[k])));
    basis.exponents[x] = digits;
  }
  return basis;
}

}  // namespace

AbelianBasis find_abelian_basis(const FiniteGroup& g, const Subgroup& within, std::optional<std::uint64_t> shuffle_seed) {
  for (auto x : within.elements())
    for (auto y : within.elements())
      if (g.mul(x, y) != g.mul(y, x)) throw NotApplicable("find_abelian_basis requires an abelian subgroup");
  std::vector<Element> gens;
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  for (auto p : prime_factors(within.order())) {
    std::vector<Element> part;
    for (auto x : within.elements())
      if (x != g.identity() && is_power_of(g.element_order(x), p)) part.push_back(x);
    if (shuffle_seed) {
      // Fisher-Yates on raw engine output keeps the order reproducible across standard libraries.
      for (std::size_t i = part.size(); i > 1; --i) std::swap(part[i - 1], part[rng() % i]);
    }
    std::stable_sort(part.begin(), part.end(),
                     [&](Element a, Element b) { return g.element_order(a) > g.element_order(b); });
    std::size_t sylow = 1;
    std::size_t rest = within.order();
    while (rest % p == 0) {
      rest /= p;
      sylow *= p;
    }
    auto found = BasisSearch(g, std::move(part), sylow).run();
    gens.insert(gens.end(), found.begin(), found.end());
  }
  return with_exponents(g, std::move(gens));
}

AbelianBasis abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotApplicable("abelian_decomposition requires an abelian group");
  const auto& factors = g.cyclic_factors();
  if (factors.empty()) return find_abelian_basis(g, whole_group(g));
  AbelianBasis basis;
  basis.orders = factors;
  std::size_t stride = g.order();
  for (auto m : factors) {
    stride /= m;
    basis.generators.push_back(static_cast<Element>(m > 1 ? stride : 0));
  }
  basis.exponents.assign(g.order(), std::vector<std::size_t>(factors.size()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t rest = x;
    for (std::size_t k = factors.size(); k-- > 0;) {
      basis.exponents[x][k] = rest % factors[k];
      rest /= factors[k];
    }
  }
  return basis;
}

}  // namespace cayleycodes
