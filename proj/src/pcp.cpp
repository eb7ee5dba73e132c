#include "cayleycodes/pcp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cayleycodes/parallel.hpp"

namespace cayleycodes {

const char* to_string(PcpScope scope) { return scope == PcpScope::exhaustive ? "exhaustive" : "sampled"; }

namespace {

struct MaskOutcome {
  std::size_t codes = 0;
  std::optional<PcpCounterexample> counterexample;
};

MaskOutcome check_connection_set(const FiniteGroup& g, const Automorphism& sigma, bool total, ConnectionSet s,
                                 const Bounds& bounds) {
  const CayleyGraph graph(g, std::move(s));
  const auto codes = enumerate_perfect_codes_serial(graph, total, bounds);
  MaskOutcome out;
  out.codes = codes.size();
  for (const auto& c : codes) {
    const auto image = sigma.apply(c);
    const bool ok = total ? is_total_perfect_code(graph, image) : is_perfect_code(graph, image);
    if (!ok) {
      out.counterexample = PcpCounterexample{graph.connection_set(), c};
      break;
    }
  }
  return out;
}

std::vector<std::uint64_t> sweep_masks(std::size_t orbit_count, bool exhaustive, const PcpOptions& options) {
  std::vector<std::uint64_t> masks;
  if (exhaustive) {
    masks.resize(std::size_t{1} << orbit_count);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    return masks;
  }
  std::mt19937_64 rng(options.seed);
  const std::uint64_t keep = orbit_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << orbit_count) - 1;
  masks.reserve(options.budget);
  for (std::size_t i = 0; i < options.budget; ++i) masks.push_back(rng() & keep);
  return masks;
}

template <class Map>
PcpReport sweep(const FiniteGroup& g, const Automorphism& sigma, bool total, const PcpOptions& options,
                const Bounds& bounds, Map&& map) {
  if (sigma.size() != g.order()) throw NotApplicable("automorphism does not match the group order");
  if (g.order() > bounds.enumerate_max_order)
    throw BoundExceeded("PCP sweep: group order", g.order(), bounds.enumerate_max_order);
  const auto orbits = inverse_orbits(g);
  const bool exhaustive = !options.force_sampled && g.order() <= bounds.pcp_exhaustive_order &&
                          orbits.size() <= bounds.pcp_exhaustive_orbits;
  const auto masks = sweep_masks(orbits.size(), exhaustive, options);
  const auto outcomes = map(masks.size(), [&](std::size_t i) {
    return check_connection_set(g, sigma, total, connection_set_from_orbits(g, orbits, masks[i]), bounds);
  });

  PcpReport report{sigma, false, true, std::nullopt, PcpScope::exhaustive, std::nullopt, 0, 0};
  report.power = is_power_automorphism(g, sigma);
  report.scope = exhaustive ? PcpScope::exhaustive : PcpScope::sampled;
  if (!exhaustive) report.seed = options.seed;
  report.connection_sets = masks.size();
  for (const auto& o : outcomes) {
    report.codes += o.codes;
    if (o.counterexample && !report.counterexample) {
      report.preserving = false;
      report.counterexample = o.counterexample;
    }
  }
  return report;
}


}  // namespace

PcpReport is_pcp_automorphism(const FiniteGroup& g, const Automorphism& sigma, const PcpOptions& options,
                              const Bounds& bounds) {
  return sweep(g, sigma, false, options, bounds, [](std::size_t n, auto&& f) { return parallel_map(n, f); });
}

PcpReport is_tpcp_automorphism(const FiniteGroup& g, const Automorphism& sigma, const PcpOptions& options,
                               const Bounds& bounds) {
  return sweep(g, sigma, true, options, bounds, [](std::size_t n, auto&& f) { return parallel_map(n, f); });
}

PcpReport pcp_sweep_serial(const FiniteGroup& g, const Automorphism& sigma, bool total, const PcpOptions& options,
                           const Bounds& bounds) {
  return sweep(g, sigma, total, options, bounds, [](std::size_t n, auto&& f) { return serial_map(n, f); });
}

std::vector<Automorphism> all_power_automorphisms(const FiniteGroup& g, const Bounds& bounds) {
  std::vector<Automorphism> out;
  for (auto& a : all_automorphisms(g, bounds))
    if (is_power_automorphism(g, a)) out.push_back(std::move(a));
  if (!is_closed_under_composition(out)) throw Defect("power automorphisms are not closed under composition");
  return out;
}

Automorphism prop3_sigma(const FiniteGroup& g, Element by) { return inner_automorphism(g, g.inv(by)); }

std::optional<Prop3Witness> prop3_witness(const FiniteGroup& g, Element by, const Bounds& bounds) {
  const Automorphism sigma = prop3_sigma(g, by);
  if (is_power_automorphism(g, sigma)) return std::nullopt;
  auto subgroups = all_subgroups(g, bounds);
  std::sort(subgroups.begin(), subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements() < b.elements(); });
  for (const auto& h : subgroups) {
    if (h.is_trivial()) continue;
    for (auto x : h.elements()) {
      const Element moved = g.conjugate(by, x);
      if (h.contains(moved)) continue;
      const auto ids = right_coset_ids(g, h);
      const auto blocks = right_cosets(g, h);
      std::vector<Element> c{g.identity(), moved};
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (b != ids[g.identity()] && b != ids[moved]) c.push_back(blocks[b].front());
      std::vector<Element> s;
      for (auto y : h.elements())
        if (y != g.identity()) s.push_back(y);
      CodeCandidate code = make_element_set(std::move(c));
      CodeCandidate image = sigma.apply(code);
      return Prop3Witness{h, x, ConnectionSet::make(g, std::move(s)), std::move(code), std::move(image)};
    }
  }
  throw Defect("conjugation is not a power automorphism yet fixes every subgroup");
}

CorThm4Result verify_cor_thm4(const FiniteGroup& g, bool allow_sampling, const Bounds& bounds) {
  if (!g.is_abelian()) throw NotApplicable("verify_cor_thm4 requires an abelian group");
  if (g.order() > bounds.pcp_exhaustive_order && !allow_sampling)
    throw BoundExceeded("verify_cor_thm4: exhaustive group order", g.order(), bounds.pcp_exhaustive_order);
  CorThm4Result result;
  auto autos = all_power_automorphisms(g, bounds);
  for (long long m = 1; m <= static_cast<long long>(g.order()); ++m) {
    if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
    result.coprime_powers.push_back(m);
    auto p = power_map(g, m);
    if (std::find(autos.begin(), autos.end(), p) == autos.end()) autos.push_back(std::move(p));
  }
  for (const auto& sigma : autos) {
    ++result.automorphisms_checked;
    for (bool total : {false, true}) {
      auto report = total ? is_tpcp_automorphism(g, sigma, {}, bounds) : is_pcp_automorphism(g, sigma, {}, bounds);
      if (!report.preserving) {
        result.holds = false;
        result.failures.push_back(std::move(report));
      }
    }
  }
  return result;
}

TrivialCentreResult verify_trivial_centre_corollary(const FiniteGroup& g, const Bounds& bounds) {
  if (centre(g).size() != 1) throw NotApplicable("verify_trivial_centre_corollary requires a trivial centre");
  TrivialCentreResult result;
  for (Element by = 0; by < g.order(); ++by) {
    if (by == g.identity()) continue;
    ++result.inner_checked;
    if (const auto w = prop3_witness(g, by, bounds)) {
      const CayleyGraph graph(g, w->s);
      if (is_perfect_code(graph, w->c) && !is_perfect_code(graph, w->c_sigma))
        ++result.witnesses;
      else
        result.survivors.push_back(by);
      continue;
    }
    if (!is_pcp_automorphism(g, prop3_sigma(g, by), {}, bounds).preserving)
      ++result.sweep_refutations;
    else
      result.survivors.push_back(by);
  }
  result.holds = result.survivors.empty();
  return result;
}

}  // namespace cayleycodes
