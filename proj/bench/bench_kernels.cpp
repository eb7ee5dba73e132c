// Serial reference routes against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "cayleycodes/cayley_graph.hpp"
#include "cayleycodes/characters.hpp"
#include "cayleycodes/group_ring.hpp"
#include "cayleycodes/pcp.hpp"

using namespace cayleycodes;

namespace {

GroupRingVector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GroupRingVector v{std::vector<std::int64_t>(n)};
  for (auto& c : v.coeffs) c = static_cast<std::int64_t>(rng() % 7) - 3;
  return v;
}

template <bool Serial>
void group_ring(benchmark::State& state) {
  const auto g = make_dihedral(static_cast<std::size_t>(state.range(0)));
  const auto u = random_vector(g.order(), 1), v = random_vector(g.order(), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(Serial ? group_ring_product_serial(g, u, v) : group_ring_product(g, u, v));
}

// Z_4^2 x Z_2 with S = {a1^+-1, a2^+-1}: many perfect codes to enumerate
CayleyGraph code_graph() {
  const auto g = make_abelian({2, 4, 4});
  return CayleyGraph(g, ConnectionSet::make(g, {1, 3, 4, 12}));
}

template <bool Serial>
void enumerate(benchmark::State& state) {
  const auto graph = code_graph();
  Bounds bounds = default_bounds();
  bounds.enumerate_max_order = 32;
  for (auto _ : state)
    benchmark::DoNotOptimize(Serial ? enumerate_perfect_codes_serial(graph, false, bounds)
                                    : enumerate_perfect_codes(graph, false, bounds));
}

template <bool Serial>
void spectral(benchmark::State& state) {
  const auto g = make_cyclic(static_cast<std::size_t>(state.range(0)));
  // a genuine tiling, so neither route can stop at a failing character
  std::vector<Element> a, b;
  for (Element x = 0; x < 4; ++x) a.push_back(x);
  for (Element x = 0; x < g.order(); x += 4) b.push_back(x);
  for (auto _ : state)
    benchmark::DoNotOptimize(Serial ? spectral_tiling_check_serial(g, a, b) : spectral_tiling_check(g, a, b));
}

template <bool Serial>
void pcp_sweep(benchmark::State& state) {
  const auto g = make_dihedral(6);
  const auto inner = inner_automorphism(g, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(Serial ? pcp_sweep_serial(g, inner, false) : is_pcp_automorphism(g, inner));
}

}  // namespace

BENCHMARK(group_ring<true>)->Name("group_ring_product/serial")->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(group_ring<false>)->Name("group_ring_product/openmp")->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(enumerate<true>)->Name("enumerate_perfect_codes/serial");
BENCHMARK(enumerate<false>)->Name("enumerate_perfect_codes/openmp");
BENCHMARK(spectral<true>)->Name("spectral_tiling_check/serial")->Arg(24)->Arg(60)->Arg(120);
BENCHMARK(spectral<false>)->Name("spectral_tiling_check/openmp")->Arg(24)->Arg(60)->Arg(120);
BENCHMARK(pcp_sweep<true>)->Name("pcp_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(pcp_sweep<false>)->Name("pcp_sweep/openmp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
