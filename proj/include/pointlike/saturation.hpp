#ifndef POINTLIKE_SATURATION_HPP
#define POINTLIKE_SATURATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

/// A canonical nonempty subset of a fixed semigroup T, as a bit mask over
/// element indices. An element of the power semigroup 2^T.
struct SubsetElt {
  std::uint64_t mask = 0;
  std::uint32_t universe = 0;

  static SubsetElt singleton(element t, std::uint32_t universe);
  static SubsetElt from_elements(const std::vector<element>& elts,
                                 std::uint32_t universe);

  bool contains(element t) const { return (mask >> t) & 1; }
  bool subset_of(const SubsetElt& other) const {
    return (mask & ~other.mask) == 0;
  }
  std::size_t count() const;
  std::vector<element> elements() const;

  friend bool operator==(const SubsetElt&, const SubsetElt&) = default;
};

/// Elementwise product set XY = {xy | x in X, y in Y}.
SubsetElt power_product(const FiniteSemigroup& t, const SubsetElt& x,
                        const SubsetElt& y);

enum class Strategy { kernel_rule, pseudoidentity, both };

std::string strategy_name(Strategy s);

struct SaturationOptions {
  std::size_t max_universe = 8;
  /// Cap on the family size; only reachable when max_universe is raised.
  std::size_t max_members = 1 << 16;
  /// Cap on words x tuples examined per pseudoidentity rule pass.
  std::size_t max_tuple_evals = 1 << 20;
  bool record_trace = false;
  /// Words for the pseudoidentity strategy; ignored by the kernel rule.
  std::vector<GroupWord> words;
};

struct TraceEntry {
  std::string rule;
  std::uint64_t produced;
  std::vector<std::uint64_t> sources;
};

struct SaturationReport {
  std::size_t member_count = 0;
  std::size_t product_additions = 0;
  std::size_t kernel_rule_additions = 0;
  std::size_t pseudo_rule_additions = 0;
  std::size_t rounds = 0;
  double wall_seconds = 0.0;
  Strategy strategy = Strategy::kernel_rule;
};

/// The generated closure family C of 2^T whose downward closure is the
/// saturation of the singletons. C itself is not downward closed; pointlike
/// queries test containment in a member.
struct SaturationFamily {
  FiniteSemigroup base;
  KernelFunctor functor;
  std::uint32_t universe = 0;
  /// Sorted masks; member i of `table` is masks[i].
  std::vector<std::uint64_t> masks;
  /// Induced multiplication on the members.
  FiniteSemigroup table;
  GreenData green_data;
  /// Inclusion-maximal members, an antichain, sorted.
  std::vector<std::uint64_t> maximal;
  std::vector<TraceEntry> trace;
  SaturationReport report;

  std::optional<std::size_t> index_of(std::uint64_t mask) const;
  bool is_member(std::uint64_t mask) const;
  /// True iff the subset lies under some member (virtual downward closure).
  bool is_pointlike(const SubsetElt& x) const;
  /// All pairs {s, t}, s != t, contained together in some member.
  std::vector<std::pair<element, element>> pointlike_pairs() const;
};

/// Computes the saturation of the singletons of 2^T under the selected
/// closure rule: the fixpoint of product closure plus the rule step.
/// Under Strategy::both the two rules run independently and their maximal
/// antichains must agree.
SaturationFamily saturate(const FiniteSemigroup& t, const KernelFunctor& k,
                          Strategy strategy,
                          const SaturationOptions& opts = {});

/// One kernel-rule pass over a product-closed member list: for each
/// idempotent member E, the union of K_H of the maximal subgroup of the
/// family at E. Returns the masks not already present.
std::vector<std::uint64_t> kernel_rule_step(
    const FiniteSemigroup& t, const std::vector<std::uint64_t>& members,
    const KernelFunctor& k);

/// One pseudoidentity-rule pass: for each word and each tuple of maximal
/// members, the union of the cyclic group generated by the word's value at
/// the tuple conjugated into the maximal subgroup at a minimal-ideal
/// idempotent. Returns the masks not already present.
std::vector<std::uint64_t> pseudoidentity_rule_step(
    const FiniteSemigroup& t, const std::vector<std::uint64_t>& members,
    const std::vector<GroupWord>& words, std::size_t max_tuple_evals);

/// The word list the named functors are defined by, when one exists with
/// finitely many finite words: trivial -> {x}, abelian -> {[x,y]},
/// verbal -> its own words. Empty otherwise.
std::optional<std::vector<GroupWord>> default_pseudoidentity_words(
    const KernelFunctor& k);

}  // namespace pointlike

#endif  // POINTLIKE_SATURATION_HPP
