#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayleycodes/automorphism.hpp"
#include "cayleycodes/bounds.hpp"
#include "cayleycodes/cayley_graph.hpp"
#include "cayleycodes/group.hpp"
#include "cayleycodes/subgroup.hpp"

namespace cayleycodes {

enum class PcpScope { exhaustive, sampled };

const char* to_string(PcpScope scope);

inline constexpr std::uint64_t default_pcp_seed = 0x5eed5eedULL;
inline constexpr std::size_t default_pcp_budget = 512;

struct PcpCounterexample {
  ConnectionSet s;
  CodeCandidate c;
};

struct PcpReport {
  Automorphism automorphism;
  bool power = false;
  bool preserving = true;
  std::optional<PcpCounterexample> counterexample;
  PcpScope scope = PcpScope::exhaustive;
  std::optional<std::uint64_t> seed;  // set in sampled mode
  std::size_t connection_sets = 0;
  std::size_t codes = 0;
};

struct PcpOptions {
  std::size_t budget = default_pcp_budget;  // connection sets drawn in sampled mode
  std::uint64_t seed = default_pcp_seed;
  bool force_sampled = false;
};

// Whether sigma maps every perfect code (total perfect code) of every
// Cayley graph of g to one of the same graph. Exhaustive over all connection
// sets, built from inverse orbits, when |G| and the orbit count are within
// the PCP thresholds of `bounds`; otherwise `budget` connection sets are
// drawn. The counterexample, if any, is the first connection set in sweep
// order and the least code within it.
PcpReport is_pcp_automorphism(const FiniteGroup& g, const Automorphism& sigma, const PcpOptions& options = {},
                              const Bounds& bounds = default_bounds());
PcpReport is_tpcp_automorphism(const FiniteGroup& g, const Automorphism& sigma, const PcpOptions& options = {},
                               const Bounds& bounds = default_bounds());

// Serial reference for both of the above.
PcpReport pcp_sweep_serial(const FiniteGroup& g, const Automorphism& sigma, bool total,
                           const PcpOptions& options = {}, const Bounds& bounds = default_bounds());

std::vector<Automorphism> all_power_automorphisms(const FiniteGroup& g, const Bounds& bounds = default_bounds());

// Counterexample for sigma: x -> g^-1 x g, which maps C to g^-1 C g.
struct Prop3Witness {
  Subgroup h;
  Element moved;  // h in H with g h g^-1 outside H
  ConnectionSet s;
  CodeCandidate c;
  CodeCandidate c_sigma;
};

// Absent when conjugation by `by` is a power automorphism. Otherwise H is
// the least nontrivial subgroup (by element list) moved by the conjugation,
// S = H \ {e}, and C a right transversal of H through e and g h g^-1 with
// least-index representatives elsewhere.
std::optional<Prop3Witness> prop3_witness(const FiniteGroup& g, Element by, const Bounds& bounds = default_bounds());

// x -> g^-1 x g, the automorphism the witness is built against.
Automorphism prop3_sigma(const FiniteGroup& g, Element by);

struct CorThm4Result {
  bool holds = true;
  std::size_t automorphisms_checked = 0;
  std::vector<long long> coprime_powers;
  std::vector<PcpReport> failures;
};

// Every power automorphism of abelian g, including each x -> x^m with m
// coprime to |G|, is PCP and TPCP. Throws BoundExceeded past the exhaustive
// threshold unless sampling is allowed.
CorThm4Result verify_cor_thm4(const FiniteGroup& g, bool allow_sampling = false,
                              const Bounds& bounds = default_bounds());

struct TrivialCentreResult {
  bool holds = true;
  std::size_t inner_checked = 0;
  std::size_t witnesses = 0;        // refuted by prop3_witness
  std::size_t sweep_refutations = 0;  // power inner automorphisms refuted by the PCP sweep
  std::vector<Element> survivors;   // g != e whose conjugation was not refuted
};

// For centre-trivial g, every inner automorphism other than the identity is
// refuted directly. Throws NotApplicable when the centre is nontrivial.
TrivialCentreResult verify_trivial_centre_corollary(const FiniteGroup& g, const Bounds& bounds = default_bounds());

}  // namespace cayleycodes
