#ifndef POINTLIKE_FLOW_HPP
#define POINTLIKE_FLOW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

/// The materialized downward closure S of a saturation family: every
/// nonempty subset of T lying under some member, with its induced
/// structure and per-member H-element flags.
struct SatSemigroup {
  FiniteSemigroup base;
  std::uint32_t universe = 0;
  /// Sorted masks; element i of `sgp` is masks[i].
  std::vector<std::uint64_t> masks;
  FiniteSemigroup sgp;
  GreenData green_data;
  /// h_element[i]: the Schutzenberger group of member i's H-class is in H.
  std::vector<bool> h_element;
  /// singleton_index[t] is the member index of {t}.
  std::vector<element> singleton_index;

  std::size_t size() const { return masks.size(); }
  element index_of(std::uint64_t mask) const;
};

SatSemigroup materialize_downclosure(const SaturationFamily& c,
                                     const KernelFunctor& k,
                                     std::size_t max_universe = 6);

/// The blowup operator b on S: an idempotent self-map given per L-class by
/// a right multiplier, fixing H-elements, sending anything else strictly
/// H-down, and containing its argument coordinatewise.
struct BlowupOp {
  /// Image of each member.
  std::vector<element> map;
  /// Multiplier per L-class id; value in [0, |S|], where |S| denotes I.
  std::vector<element> multiplier;

  element apply(element s) const { return map[s]; }
};

/// Builds the blowup operator: per non-H L-class, a subgroup of the right
/// stabilizer is lifted onto the Schutzenberger group and the union of its
/// H-kernel is the multiplier; the pre-blowup is then composed to its
/// idempotent power. All four blowup axioms are checked.
/// `idempotent_choice` selects among the idempotents of the stabilizer's
/// minimal ideal (clamped); any choice yields the same operator on chains.
BlowupOp build_blowup(const SatSemigroup& s, const KernelFunctor& k,
                      std::size_t idempotent_choice = 0);

void check_blowup_axioms(const SatSemigroup& s, const BlowupOp& b);

/// An L-chain over S. letters[0] is the first letter q_1 (the L-greatest
/// end) and letters.back() is the last letter q_n, which is the flow value
/// omega. A chain is an L-chain when each later letter is L-below its
/// predecessor, and strict when strictly below.
using LChain = std::vector<element>;

bool is_l_chain(const SatSemigroup& s, const LChain& q);
bool is_strict_l_chain(const SatSemigroup& s, const LChain& q);

/// The retraction to strict chains: erases all but the last letter of
/// each maximal run of L-equivalent letters. Throws NotAChainError if the
/// input is not weakly decreasing.
LChain rho(const SatSemigroup& s, const LChain& q);

/// Coordinatewise right multiplication by an element of S^I
/// (m == |S| denotes I).
LChain delta(const SatSemigroup& s, const LChain& q, element m);

/// The chain operator B: (q . s)B = (q Delta_{m_{L_s}})B . sb, with
/// epsilon B = epsilon.
LChain big_b(const SatSemigroup& s, const BlowupOp& b, const LChain& q);

/// tau-bar_t: q -> (q Delta_t . t)B, where t names a member of S.
LChain tau_bar(const SatSemigroup& s, const BlowupOp& b, const LChain& q,
               element t_member);

/// The automaton transition: tau_t = tau-bar_t followed by rho. `t` is an
/// element of the base semigroup T.
LChain tau_step(const SatSemigroup& s, const BlowupOp& b, const LChain& q,
                element t);

/// The reachable part of the automaton whose states are strict L-chains of
/// H-elements, with the flow q -> q omega (epsilon -> {I}).
struct FlowAutomaton {
  std::vector<LChain> states;  // states[0] is epsilon
  /// delta[state][t] for t in T.
  std::vector<std::vector<std::uint32_t>> delta;

  /// Flow value of a state, as a subset mask; nullopt encodes {I}.
  std::optional<std::uint64_t> flow_mask(const SatSemigroup& s,
                                         std::uint32_t state) const;
};

FlowAutomaton build_automaton_and_flow(const SatSemigroup& s,
                                       const BlowupOp& b,
                                       std::size_t max_states = 20000);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

struct VerifyOptions {
  std::size_t max_universe = 6;
  std::size_t max_states = 20000;
  std::size_t max_transition_elements = 50000;
  /// Exhaustive chain enumeration below this count, sampling above it.
  std::size_t chain_enum_cap = 20000;
  std::size_t chain_samples_per_length = 200;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t sat_members = 0;
  std::size_t automaton_states = 0;
  std::size_t transition_semigroup_size = 0;
  double wall_seconds = 0.0;

  bool all_passed() const;
  const CheckResult& check(const std::string& name) const;
};

/// Runs the six machine checks on a saturation family: FLOW, HBAR,
/// COMPLETE, BLOWUP, RHO-RESPECT and ZEIGER. Every check is expected to
/// pass; a failure indicates a bug and is reported with a witness.
VerifyReport verify_all(const KernelFunctor& k, const SaturationFamily& c,
                        const VerifyOptions& opts = {});

}  // namespace pointlike

#endif  // POINTLIKE_FLOW_HPP
