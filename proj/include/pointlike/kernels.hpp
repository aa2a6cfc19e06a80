#ifndef POINTLIKE_KERNELS_HPP
#define POINTLIKE_KERNELS_HPP

#include <string>
#include <vector>

#include "pointlike/group.hpp"

namespace pointlike {

/// A group variety H, realized as the computable map G -> K_H(G), the
/// smallest normal subgroup with quotient in H.
struct KernelFunctor {
  enum class Tag {
    trivial,    // the trivial variety; kernel is all of G
    all,        // all finite groups; kernel is {1}
    abelian,    // derived subgroup
    p_group,    // subgroup generated by the p'-elements
    pi_group,   // subgroup generated by the pi'-elements
    nilpotent,  // lower-central-series residual
    solvable,   // derived-series residual
    verbal      // generated by all values of a word list
  };

  Tag tag = Tag::trivial;
  std::vector<unsigned> primes;
  std::vector<GroupWord> words;

  static KernelFunctor trivial() { return {Tag::trivial, {}, {}}; }
  static KernelFunctor all() { return {Tag::all, {}, {}}; }
  static KernelFunctor abelian() { return {Tag::abelian, {}, {}}; }
  static KernelFunctor p_group(unsigned p);
  static KernelFunctor pi_group(std::vector<unsigned> primes);
  static KernelFunctor nilpotent() { return {Tag::nilpotent, {}, {}}; }
  static KernelFunctor solvable() { return {Tag::solvable, {}, {}}; }
  static KernelFunctor verbal(std::vector<GroupWord> words);

  /// Stable display name: "trivial", "ab", "p:2", "pi:2,3", ...
  std::string name() const;
};

/// Members of K_H(g), as sorted local indices. The result is checked to be
/// normal with quotient in H before it is returned.
std::vector<group_index> kernel_members(const FiniteGroup& g,
                                        const KernelFunctor& k);

/// K_H(g) packaged as a group; `elements` are local indices of g.
FiniteGroup kernel(const FiniteGroup& g, const KernelFunctor& k);

/// Brute-force oracle: enumerates every normal subgroup of g, keeps those
/// whose quotient lies in H, and returns the smallest, checking that it is
/// contained in all the others. Throws CapExceededError above the cap.
std::vector<group_index> kernel_minimality_oracle(const FiniteGroup& g,
                                                  const KernelFunctor& k,
                                                  std::size_t cap = 24);

/// Direct membership test for g in H, not via kernels. Used to validate
/// quotients and by the oracle.
bool satisfies_variety_directly(const FiniteGroup& g, const KernelFunctor& k);

/// True iff K_H(g) is trivial.
bool is_in_variety(const FiniteGroup& g, const KernelFunctor& k);

}  // namespace pointlike

#endif  // POINTLIKE_KERNELS_HPP
