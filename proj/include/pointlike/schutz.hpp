#ifndef POINTLIKE_SCHUTZ_HPP
#define POINTLIKE_SCHUTZ_HPP

#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/group.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

/// The right Schutzenberger group of an H-class: the faithful quotient of
/// the right-stabilizer action. Permutations are stored explicitly so that
/// kernels can be computed on them directly.
struct SchutzView {
  /// The H-class, sorted by element index.
  std::vector<element> h_class;
  /// Distinct permutations of h_class (by position), one per group element.
  std::vector<std::vector<group_index>> perms;
  /// For each permutation, the least stabilizer element of S^I inducing it
  /// (index size(S) denotes I).
  std::vector<element> labels;
  /// The induced group; its `elements` are indices into perms.
  FiniteGroup group;
};

/// The right stabilizer {s in S^I : Ls is contained in L} of an L-class,
/// returned as sorted S^I indices (index size(S) is I, always present).
/// This is a submonoid of S^I.
std::vector<element> right_stabilizer(const FiniteSemigroup& s,
                                      const GreenData& g, class_id l_class);

SchutzView schutzenberger_right(const FiniteSemigroup& s, const GreenData& g,
                                class_id h_class);

/// Given a subsemigroup p and a surjective homomorphism phi onto a group
/// (phi[x] is the target local index of p-element x), returns a subgroup of
/// p whose image is the whole target: the maximal subgroup at an idempotent
/// of the minimal ideal of p. The image is checked to equal the target
/// before returning. `idempotent_choice` picks among the ideal's
/// idempotents in ascending order (clamped); the default lowest-index one
/// keeps builds deterministic.
FiniteGroup lift_group_onto(const FiniteSemigroup& p,
                            const std::vector<group_index>& phi,
                            const FiniteGroup& target,
                            std::size_t idempotent_choice = 0);

/// True iff the Schutzenberger group of x's H-class lies in the variety,
/// i.e. K_H of it is trivial. Constant along L-classes.
bool is_H_element(const FiniteSemigroup& s, const GreenData& g, element x,
                  const KernelFunctor& k);

}  // namespace pointlike

#endif  // POINTLIKE_SCHUTZ_HPP
